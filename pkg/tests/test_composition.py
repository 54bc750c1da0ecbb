import pytest
from hypothesis import given, settings, strategies as st

from moycalc import corpus
from moycalc.braid import ColoredBraid, resolutions
from moycalc.composition import (
    check_state_splitting,
    composition_rhs,
    merge_state,
    split_state,
    verify_composition,
)
from moycalc.laurent import HalfLaurent, q, quantum_binomial
from moycalc.statesum import enumerate_states
from moycalc.web import circle, empty_web, full_labelling, theta

WEBS = corpus.corpus_webs()


def test_split_circle_states():
    s = split_state(circle(1), (frozenset({1}),), 1, 1)
    assert s.base_labelling == (0,)
    assert s.right_state == (frozenset({0}),)
    s = split_state(circle(1), (frozenset({-1}),), 1, 1)
    assert s.base_labelling == (1,)
    assert s.left_state == (frozenset({0}),)


def test_lower_block_only_gives_full_labelling():
    w = theta(2, 1)
    for phi in enumerate_states(w, 4):
        if all(a < 0 for s in phi for a in s):
            s = split_state(w, phi, 2, 2)
            assert s.base_labelling == full_labelling(w)
            assert all(not part for part in s.right_state)


def test_split_then_merge():
    w = theta(3, 1)
    for phi in enumerate_states(w, 5):
        s = split_state(w, phi, 2, 3)
        assert merge_state(s.left_state, s.right_state, 2, 3) == tuple(phi)


def test_circle_rhs():
    assert composition_rhs(circle(1), 1, 1) == q(-1) + q(1)
    assert composition_rhs(empty_web(), 2, 1) == HalfLaurent.one()
    for m in range(4):
        for M in range(1, 4):
            for N in range(1, 4):
                if m <= M + N:
                    assert composition_rhs(circle(m), M, N) == quantum_binomial(M + N, m)


def test_report_for_circle():
    rep = verify_composition(circle(1), 1, 1)
    assert rep.holds and rep.lhs == rep.rhs == q(-1) + q(1)
    assert sorted(t.sigma for t in rep.terms) == [-1, 1]


def test_theta():
    assert verify_composition(theta(2, 1), 2, 1).holds


def test_trefoil_resolutions():
    for r in resolutions(corpus.trefoil(1)):
        assert verify_composition(r.web, 1, 1).holds


def test_bad_ranks():
    with pytest.raises(ValueError):
        verify_composition(circle(1), 0, 2)


@settings(max_examples=40)
@given(st.sampled_from(WEBS), st.integers(1, 3), st.integers(1, 3))
def test_composition_on_corpus(w, M, N):
    rep = verify_composition(w, M, N)
    assert rep.holds, rep.to_json()


@pytest.mark.parametrize("w", WEBS[:20], ids=lambda w: str(w.to_json()))
def test_state_splitting(w):
    rep = check_state_splitting(w, 2, 2)
    assert rep.ok, rep.failures[:3]


def test_report_json_is_exact():
    data = verify_composition(theta(3, 1), 1, 2).to_json()
    assert data["holds"] is True
    assert all(isinstance(t["sigma"], str) for t in data["terms"])
    assert HalfLaurent.from_json(data["lhs"]) == HalfLaurent.from_json(data["rhs"])
