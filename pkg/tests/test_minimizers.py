import pytest

from spfflv.chart import m_set
from spfflv.fflv import add, unit
from spfflv.lie import Root
from spfflv.minimizers import pairing, s_IJ, s_IJ_defined, s_min_root
from spfflv.verify import minimizer_cases

A11, A12, A22, A11b = Root(1, 1), Root(1, 2), Root(2, 2), Root(1, 1, True)
ONE, TWO, TWOB, ONEB = 1, 2, 3, 4


def test_single_root_cases():
    assert s_min_root(ONE, TWO, 2) == A11
    assert s_min_root(ONE, ONEB, 2) == A11b
    assert s_min_root(TWOB, ONEB, 2) == A11
    with pytest.raises(ValueError):
        s_min_root(2, 1, 2)


def test_s_IJ_examples():
    assert s_IJ((1, 2), (1, 2), 2) == (0, 0, 0, 0)
    assert pairing((ONE, TWO), (TWOB, ONEB)) == [(ONE, ONEB), (TWO, TWOB)]
    assert s_IJ((ONE, TWO), (TWOB, ONEB), 2) == add(unit(A11b, 2), unit(A22, 2))
    assert s_IJ((ONE, TWO), (TWO, TWOB), 2) == unit(A12, 2)


def test_undefined_pairs_can_still_have_paths():
    # the anti-diagonal pair (2', 2) is decreasing, yet f^s e_I reaches e_J
    I, J = (ONE, TWOB), (TWO, ONEB)
    assert not s_IJ_defined(I, J)
    with pytest.raises(ValueError):
        s_IJ(I, J, 2)
    assert m_set(I, J, 2)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_minimiser_is_reachable(n):
    for I, J in minimizer_cases(n):
        assert s_IJ(I, J, n) in m_set(I, J, n)
