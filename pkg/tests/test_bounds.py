from fractions import Fraction

import pytest

from moycalc import corpus
from moycalc.bounds import (
    chain_level_bounds_check,
    correction_terms,
    mfw_report,
    mfw_window,
    pairing_within_rho,
    polynomial_bounds_check,
    track_degree_bounds,
)
from moycalc.braid import ColoredBraid
from moycalc.statesum import bracket
from moycalc.web import circle, theta

WEBS = corpus.corpus_webs()


def test_circle_bounds_are_sharp():
    for N in range(2, 6):
        for m in range(1, N):
            lo, hi = track_degree_bounds(circle(m), N)
            assert (lo, hi) == (-m * (N - m), m * (N - m))
            assert bracket(circle(m), N).degree_range() == (lo, hi)


def test_theta_bounds():
    assert track_degree_bounds(theta(2, 1), 2) == (-3, 3)
    assert bracket(theta(2, 1), 2).degree_range() == (-1, 1)


def test_colors_above_N_rejected():
    with pytest.raises(ValueError):
        track_degree_bounds(circle(3), 2)


@pytest.mark.parametrize("w", WEBS, ids=lambda w: str(w.to_json()))
def test_track_bounds_on_corpus(w):
    for N in range(max(1, w.max_color()), 6):
        lo, hi = track_degree_bounds(w, N)
        obs = bracket(w, N).degree_range()
        assert obs is None or (lo <= obs[0] and obs[1] <= hi)


@pytest.mark.parametrize("w", WEBS[:25], ids=lambda w: str(w.to_json()))
def test_pairing_within_rho(w):
    assert pairing_within_rho(w)


def test_mfw_windows():
    assert mfw_window(corpus.trefoil(1), 2) == (1, 11)
    assert mfw_window(corpus.trefoil(2), 3) == (-2, 14)
    for m in range(1, 3):
        assert mfw_window(ColoredBraid.uniform(1, m, ()), m + 2) == (-1, 1)
    with pytest.raises(ValueError):
        mfw_window(corpus.trefoil(2), 2)


def test_chain_level_trefoil():
    rep = chain_level_bounds_check(corpus.trefoil(1), 2)
    assert rep.holds
    assert rep.window[0] == 1
    assert all(r.observed is None or r.observed[0] >= 1 for r in rep.rows)
    assert len(rep.rows) == 8


def test_chain_level_unknot():
    D = ColoredBraid.uniform(1, 2, ())
    rep = chain_level_bounds_check(D, 5)
    assert rep.window == (-6, 6) == rep.observed


@pytest.mark.parametrize("k", [1, 2])
@pytest.mark.parametrize("m", [1, 2])
def test_power_braids(k, m):
    D = corpus.power_braid(k, m)
    for N in range(m + 1, 5):
        assert chain_level_bounds_check(D, N).holds
        assert polynomial_bounds_check(D, N).holds


def test_mixed_colors_rejected():
    with pytest.raises(ValueError):
        polynomial_bounds_check(corpus.mixed_braids()[0], 4)


def test_trefoil_m2_table():
    table = mfw_report(corpus.trefoil(2), range(3, 6))
    assert table.holds


def test_unknot_ratios():
    table = mfw_report(ColoredBraid.uniform(1, 1, ()), range(2, 7))
    assert all(r.ratios == (-1, 1) for r in table.rows)
    assert table.ratios_within_limit_window()


def test_trefoil_ratio_table():
    table = mfw_report(corpus.trefoil(1), range(2, 7))
    assert table.holds and table.corrections_shrink()
    lows = [r.ratios[0] for r in table.rows]
    highs = [r.ratios[1] for r in table.rows]
    assert lows == [1] * 5
    # max deg P_N of the trefoil is 5N - 1, so the top ratio is 5 + 4/(N - 1)
    assert highs == [5 + Fraction(4, N - 1) for N in range(2, 7)]


def test_correction_terms_decay():
    D = corpus.power_braid(2, 1)
    mags = [tuple(abs(c) for c in correction_terms(D, N)) for N in range(2, 8)]
    assert all(a >= b for a, b in zip(mags, mags[1:]))


def test_report_json_uses_exact_degrees():
    data = polynomial_bounds_check(corpus.trefoil(2), 4).to_json()
    assert all(isinstance(x, str) for x in data["window"] + data["observed"])
