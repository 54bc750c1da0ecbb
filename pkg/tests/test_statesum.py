import pytest
from hypothesis import given, settings, strategies as st

from moycalc import corpus
from moycalc.laurent import HalfLaurent, q, quantum_binomial
from moycalc.statesum import (
    CapExceeded,
    alphabet,
    bracket,
    bracket_naive,
    enumerate_states,
    pi_count,
    set_caps,
    get_caps,
    state_rotation,
    trace_circles,
    vertex_weight,
)
from moycalc.web import RIGHT, Rung, TrackWeb, circle, empty_web, rotation_number, theta

WEBS = corpus.corpus_webs()


def test_alphabet():
    assert alphabet(1) == [0]
    assert alphabet(2) == [-1, 1]
    assert alphabet(4) == [-3, -1, 1, 3]
    with pytest.raises(ValueError):
        alphabet(0)


@pytest.mark.parametrize("a1,a2,expected", [({1}, {-1}, 1), (set(), {1, 3}, 0), ({3, 1}, {1, -1}, 3)])
def test_pi_count(a1, a2, expected):
    assert pi_count(a1, a2) == expected


@pytest.mark.parametrize("m,N,count", [(1, 2, 2), (2, 4, 6), (3, 2, 0)])
def test_state_counts(m, N, count):
    assert len(enumerate_states(circle(m), N)) == count


def test_theta_vertex_weights():
    w = theta(2, 1)
    split = w.vertices[0]
    phi = [frozenset()] * 6
    phi[split.e], phi[split.e1], phi[split.e2] = frozenset({-1, 1}), frozenset({1}), frozenset({-1})
    assert vertex_weight(split, phi) == q(-0.5)
    phi[split.e1], phi[split.e2] = frozenset({-1}), frozenset({1})
    assert vertex_weight(split, phi) == q(0.5)


def test_zero_thin_edge_weight_is_one():
    w = theta(2, 1)
    merge = w.vertices[1]  # one of its thin edges is the 0-colored outer edge
    for phi in enumerate_states(w, 3):
        assert vertex_weight(merge, phi) == HalfLaurent.one()


def test_state_rotation_examples():
    assert state_rotation(circle(1), (frozenset({1}),)) == 1
    assert state_rotation(circle(2), (frozenset({-3, 3}),)) == 0
    w = theta(2, 1)
    for phi in enumerate_states(w, 3):
        assert state_rotation(w, phi) == sum(phi[0])


def test_trace_two_circles():
    circles = trace_circles(circle(2), (frozenset({-1, 1}),))
    assert sorted(c.element for c in circles) == [-1, 1]
    assert all(c.turning == 1 for c in circles)


def test_theta_trace():
    w = theta(2, 1)
    for phi in enumerate_states(w, 2):
        circles = trace_circles(w, phi)
        assert sorted(c.element for c in circles) == [-1, 1]
        assert all(c.turning == 1 for c in circles)
        (through_rungs,) = [c for c in circles if len(c.edges) > 2]
        assert phi[2] == frozenset({through_rungs.element})


@pytest.mark.parametrize("w", WEBS, ids=lambda w: str(w.to_json()))
def test_total_turning_is_rotation_number(w):
    rot = rotation_number(w)
    for phi in enumerate_states(w, 3):
        circles = trace_circles(w, phi)
        assert all(c.turning == 1 for c in circles)
        assert sum(c.turning for c in circles) == rot
        assert state_rotation(w, phi, method="local") == state_rotation(w, phi, method="global")


def test_bracket_examples():
    assert bracket(circle(1), 2) == q(-1) + q(1)
    assert bracket(circle(3), 2) == HalfLaurent.zero()
    assert bracket(empty_web(), 3) == HalfLaurent.one()
    assert bracket(theta(2, 1), 2) == q(-1) + q(1)
    assert bracket_naive(theta(2, 1), 2) == q(-1) + q(1)
    assert bracket(theta(2, 1), 3) == q(-3) + 2 * q(-1) + 2 * q(1) + q(3)


def test_two_independent_circles():
    w = TrackWeb(2, (1, 1), ())
    assert bracket(w, 2) == (q(-1) + q(1)) ** 2
    assert bracket_naive(w, 2) == (q(-1) + q(1)) ** 2


@pytest.mark.parametrize("N", range(1, 7))
def test_circles_are_quantum_binomials(N):
    for m in range(N + 1):
        value = bracket(circle(m), N)
        assert value == quantum_binomial(N, m)
        if 0 < m < N:
            assert value.degree_range() == (-m * (N - m), m * (N - m))


@pytest.mark.parametrize("w", WEBS, ids=lambda w: str(w.to_json()))
def test_sweep_matches_naive(w):
    for N in range(1, 5):
        assert bracket(w, N) == bracket_naive(w, N)


@settings(max_examples=15)
@given(st.sampled_from(WEBS), st.sampled_from(WEBS), st.integers(1, 3))
def test_disjoint_union_is_product(a, b, N):
    shift = [Rung(s.pos + a.b, s.dir, s.color) for s in b.slices]
    union = TrackWeb(a.b + b.b, a.top_colors + b.top_colors, a.slices + tuple(shift))
    assert bracket(union, N) == bracket(a, N) * bracket(b, N)


def test_workers_do_not_change_result():
    for w in WEBS[-4:]:
        assert bracket(w, 4, workers=3) == bracket(w, 4)


def test_state_cap():
    with pytest.raises(CapExceeded):
        enumerate_states(circle(2), 6, cap=10)
    with pytest.raises(CapExceeded):
        bracket_naive(circle(3), 8, cap=20)


def test_section_cap():
    saved = get_caps()
    try:
        set_caps(section_cap=5)
        with pytest.raises(CapExceeded):
            bracket(theta(3, 1), 5)
    finally:
        set_caps(saved["state"], saved["section"])
    with pytest.raises(ValueError):
        set_caps(state_cap=0)
