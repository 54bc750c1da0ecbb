from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from moycalc import corpus
from moycalc.web import (
    InvalidWeb,
    LEFT,
    RIGHT,
    Rung,
    TrackWeb,
    circle,
    complement_labelling,
    edge_set,
    empty_web,
    enumerate_labellings,
    ensure_valid,
    full_labelling,
    is_labelling,
    rho,
    rotation_number,
    sigma,
    theta,
    validate_web,
    vertex_pairing,
)
from moycalc.braid import ColoredBraid, resolution_rho, resolutions

WEBS = corpus.corpus_webs()


def test_circle_is_valid():
    assert validate_web(circle(2)) == []


def test_negative_color_violation():
    w = TrackWeb(2, (1, 1), (Rung(1, RIGHT, 2),))
    (v,) = [x for x in validate_web(w) if x.rule == "nonnegative"]
    assert v.slice_index == 0
    assert "-1" in v.message


def test_closure_violation():
    w = TrackWeb(2, (1, 1), (Rung(1, RIGHT, 1),))
    (v,) = validate_web(w)
    assert v.rule == "closure" and "(0, 2)" in v.message
    with pytest.raises(InvalidWeb):
        ensure_valid(w)


def test_circle_edges():
    (e,) = edge_set(circle(3))
    assert e.color == 3


def test_theta_edges():
    w = theta(2, 1)
    edges = edge_set(w)
    assert len(edges) == 6
    assert sorted(e.color for e in edges) == [0, 1, 1, 1, 1, 2]
    outer = {e.pos: e.color for e in edges if e.kind == "outer"}
    assert outer == {1: 2, 2: 0}


@pytest.mark.parametrize("m,n,k", [(1, 1, 0), (1, 1, 1), (2, 1, 1), (1, 2, 0), (2, 2, 1)])
def test_resolution_square_colors(m, n, k):
    D = ColoredBraid(2, (m, n), (1, 1))
    r = next(r for r in resolutions(D) if r.kvec[0] == k)
    colors = [e.color for e in r.web.edges[:2]] + [e.color for e in r.web.edges[2:6]]
    # outer (m, n), first rung k, middle m-k and n+k, second rung n+k-m
    assert colors[:2] == [m, n]
    assert sorted(colors[2:]) == sorted([k, m - k, n + k, n + k - m])


def test_rotation_examples():
    assert rotation_number(circle(1)) == 1
    assert rotation_number(theta(2, 1)) == 2
    assert rotation_number(empty_web()) == 0


@pytest.mark.parametrize("b,m,word", [(2, 1, (1, 1, 1)), (3, 2, (1, -2, 1)), (2, 2, (1, -1))])
def test_resolution_rotation_and_rho(b, m, word):
    D = ColoredBraid.uniform(b, m, word)
    for r in resolutions(D):
        assert rotation_number(r.web) == b * m
        assert rho(r.web) == resolution_rho(D, r.kvec)


def test_rho_examples():
    assert rho(circle(2)) == 0
    assert rho(theta(2, 1)) == 1


def test_labelling_counts():
    assert len(enumerate_labellings(circle(3))) == 4
    assert len(enumerate_labellings(theta(2, 1))) == 4
    assert len(enumerate_labellings(TrackWeb(2, (1, 1), ()))) == 4


def test_theta_complement():
    w = theta(2, 1)
    # outer 1, vertical pos 1 carries it, rung path carries nothing
    f = (1, 0, 0, 1, 0, 0)
    assert is_labelling(w, f)
    assert complement_labelling(w, f) == (1, 0, 1, 0, 1, 1)


def test_full_labelling_complement_is_zero():
    w = theta(3, 2)
    assert set(complement_labelling(w, full_labelling(w))) == {0}


def test_pairing_examples():
    w = theta(2, 1)
    colors = w.colors
    split = w.vertices[0]  # e=outer (2), e1=rung (1), e2=vertical (1)
    f = [0] * 6
    f[split.e], f[split.e1] = 1, 1
    assert vertex_pairing(split, f, colors) == Fraction(1, 2)
    assert vertex_pairing(split, full_labelling(w), colors) == 0
    assert vertex_pairing(split, [0] * 6, colors) == 0


def test_sigma_examples():
    c = circle(1)
    assert sigma(c, (1,), 1, 1) == -1
    for M in range(1, 4):
        assert sigma(c, (0,), M, 2) == M
    w = theta(2, 1)
    assert sigma(w, full_labelling(w), 3, 3) == -3 * rotation_number(w)


@pytest.mark.parametrize("w", WEBS[:30], ids=lambda w: str(w.to_json()))
def test_labelling_identities(w):
    rot = rotation_number(w)
    for f in enumerate_labellings(w):
        fbar = complement_labelling(w, f)
        assert complement_labelling(w, fbar) == tuple(f)
        assert rotation_number(w, f) + rotation_number(w, fbar) == rot
        for v in w.vertices:
            assert vertex_pairing(v, f, w.colors) == -vertex_pairing(v, fbar, w.colors)
    assert rho(w) >= 0


def test_zero_rungs_dropped():
    w = TrackWeb(2, (1, 1), (Rung(1, LEFT, 0), Rung(1, RIGHT, 1), Rung(1, LEFT, 1), Rung(1, RIGHT, 0)))
    assert w.drop_zero_rungs().slices == (Rung(1, RIGHT, 1), Rung(1, LEFT, 1))


@given(st.sampled_from(WEBS))
def test_json_round_trip(w):
    assert TrackWeb.from_json(w.to_json()) == w


def test_from_json_rejects_bad_direction():
    with pytest.raises(ValueError):
        TrackWeb.from_json({"strands": 2, "top_colors": [1, 0], "slices": [{"pos": 1, "dir": "up", "color": 1}]})
