import pytest

from moycalc import corpus
from moycalc.acceptance import M1_BRAIDS
from moycalc.braid import ColoredBraid, invariant
from moycalc.kauffman import jones_sl2, kauffman_bracket
from moycalc.laurent import q


def test_unknot_normalization():
    assert jones_sl2(1, ()) == q(-1) + q(1)
    assert jones_sl2(2, (1,)) == q(-1) + q(1)


def test_bracket_of_hopf_link():
    # <Hopf> = -A^4 - A^-4
    assert kauffman_bracket(2, (1, 1)) == {4: -1, -4: -1}


def test_trefoil_is_chiral():
    right = jones_sl2(2, (1, 1, 1))
    assert right == q(1) + q(3) + q(5) - q(9)
    assert jones_sl2(2, (-1, -1, -1)) == right.substitute_q_inverse()
    assert jones_sl2(2, (1, 1, 1), chirality=-1) == right.substitute_q_inverse()


@pytest.mark.parametrize("b,word", M1_BRAIDS)
def test_sl2_invariant_matches_oracle(b, word):
    assert invariant(ColoredBraid.uniform(b, 1, word), 2) == jones_sl2(b, word)


def test_figure_eight_is_amphichiral():
    P = invariant(corpus.figure_eight(), 2)
    assert P == P.substitute_q_inverse()
