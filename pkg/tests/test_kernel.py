from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spfflv.kernel import (
    EQ,
    GEQ,
    ConeH,
    Ring,
    SparsePoly,
    UniverseMismatch,
    as_fraction,
    fm_eliminate,
    in_row_space,
    initial_form,
    kernel_basis,
    nonnegative_combination,
    primitive_integer,
    rank,
    solve,
    strict_point,
)

R = Ring("R", ["a", "b", "c"])
a, b, c = R.var("a"), R.var("b"), R.var("c")

coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=4)
exps = st.tuples(*[st.integers(0, 3)] * 3)
polys = st.dictionaries(exps, coeffs, max_size=5).map(lambda d: SparsePoly(R, d))
small = st.dictionaries(st.tuples(*[st.integers(0, 1)] * 3), coeffs, max_size=2).map(lambda d: SparsePoly(R, d))
weights = st.lists(st.integers(-3, 3), min_size=3, max_size=3)


def test_fraction_parsing():
    assert as_fraction("3/4") == Fraction(3, 4)
    assert as_fraction(2) == Fraction(2)
    with pytest.raises((ValueError, TypeError)):
        as_fraction(0.5)


def test_arithmetic_and_zero_terms():
    f = (a + b) * (a - b)
    assert f == a**2 - b**2
    assert not (f - f)
    assert len(a + b - b) == 1


def test_universe_mismatch():
    other = Ring("S", ["a", "b", "c"]).var("a")
    with pytest.raises(UniverseMismatch):
        a + other


def test_json_round_trip():
    f = a**2 * Fraction(3, 2) - b * c
    assert SparsePoly.from_json(f.to_json(), R) == f


def test_initial_form_examples():
    # scores 1, 1, 5: the two minimal terms survive
    X = Ring("X", ["u", "v", "w"])
    u, v, w = X.var(0), X.var(1), X.var(2)
    f = u + v + w
    assert initial_form(f, [1, 1, 5]) == u + v
    assert initial_form(u * v, [7, -2, 0]) == u * v
    assert initial_form(f, [0, 0, 0]) == f


@given(polys, polys)
def test_ring_axioms(f, g):
    assert f + g == g + f
    assert f * g == g * f
    assert (f + g) * c == f * c + g * c
    assert f - f == R.zero()


@given(polys, polys, weights)
def test_initial_form_multiplicative(f, g, v):
    assert initial_form(f * g, v) == initial_form(f, v) * initial_form(g, v)


@given(polys, polys, st.lists(small, min_size=3, max_size=3))
@settings(max_examples=50, deadline=None)
def test_subs_is_a_ring_map(f, g, images):
    assert (f * g).subs(images, R) == f.subs(images, R) * g.subs(images, R)
    assert (f + g).subs(images, R) == f.subs(images, R) + g.subs(images, R)


def test_kernel_basis_trivial():
    assert kernel_basis([[1, 0], [0, 1]]) == []
    assert len(kernel_basis([[0, 0, 0]], ncols=3)) == 3


@given(st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=1, max_size=4))
def test_kernel_basis_is_kernel(m):
    K = kernel_basis(m, ncols=4)
    assert len(K) == 4 - rank(m)
    for v in K:
        assert all(sum(Fraction(x) * y for x, y in zip(row, v)) == 0 for row in m)


def test_solve_and_row_space():
    assert solve([[1, 1], [1, -1]], [2, 0]) == [1, 1]
    assert solve([[1, 1], [2, 2]], [1, 3]) is None
    assert in_row_space([2, 2], [[1, 1]])
    assert not in_row_space([1, 0], [[1, 1]])


def test_primitive_integer():
    assert primitive_integer([Fraction(1, 2), Fraction(-3, 4)]) == (2, -3)


def test_cone_normalisation():
    cone = ConeH(2, [([2, 4], GEQ), ([1, 2], GEQ), ([-1, 0], EQ)])
    assert cone.inequalities == [(1, 2)]
    assert cone.equalities == [(1, 0)]


def test_fm_examples():
    x_ge_0 = ([1, 0], GEQ)
    y_ge_x = ([-1, 1], GEQ)
    out = fm_eliminate(ConeH(2, [x_ge_0, y_ge_x]), 0)
    # the eliminated coordinate is dropped
    assert out.dim == 1 and out.inequalities == [(1,)] and not out.equalities
    out = fm_eliminate(ConeH(1, [([1], EQ)]), 0)
    assert not out.rows


def test_strict_point():
    p = strict_point(ConeH(2, [([1, 0], GEQ), ([-1, 1], GEQ)]))
    assert p is not None and p[0] > 0 and p[1] > p[0]
    assert strict_point(ConeH(1, [([1], GEQ), ([-1], GEQ)])) is None


def test_nonnegative_combination():
    rows = [[1, 0], [0, 1]]
    assert nonnegative_combination([2, 3], rows) == [2, 3]
    assert nonnegative_combination([-1, 0], rows) is None
    # dependent rows fall back to elimination
    c = nonnegative_combination([1, 1], [[1, 0], [0, 1], [1, 1]])
    assert c is not None and all(x >= 0 for x in c)
