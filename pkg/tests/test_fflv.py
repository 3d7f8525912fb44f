import pytest
from hypothesis import given
from hypothesis import strategies as st

from spfflv.fflv import (
    add,
    antichains,
    dyck_paths,
    fflv_h,
    fundamental,
    in_fflv,
    is_dyck_path,
    lattice_points,
    minkowski_check,
    poset_less,
    restricted_roots,
    standard_decomposition,
    unit,
    weights_up_to_height,
    weyl_dim,
)
from spfflv.lie import Root

A11, A12, A22, A11b = Root(1, 1), Root(1, 2), Root(2, 2), Root(1, 1, True)


def e(*roots, n=2):
    out = tuple([0] * (n * n))
    for r in roots:
        out = add(out, unit(r, n))
    return out


def test_dyck_paths_small():
    assert dyck_paths(1) == ((Root(1, 1),),)
    paths = set(dyck_paths(2))
    assert (A11, A12, A22) in paths
    assert (A11, A12, A11b) in paths
    assert (A11,) in paths and (A22,) in paths
    for n in (2, 3, 4):
        assert all(is_dyck_path(p, n) for p in dyck_paths(n))


def test_fflv_rows_for_omega2():
    cone = fflv_h((0, 1))
    rows = {tuple(a) for a in cone.inequalities}
    # x_11 <= 0 and x_11 + x_12 + x_22 <= 1, homogenised with x_0 last
    assert (-1, 0, 0, 0, 0) in rows
    assert (-1, -1, -1, 0, 1) in rows


def test_fflv_omega1_bounds_are_one():
    cone = fflv_h((1, 0))
    for a in cone.inequalities:
        if a[-1]:
            assert a[-1] == 1


def test_lattice_points_examples():
    assert lattice_points((0, 0)) == frozenset({e()})
    assert lattice_points((1, 0)) == {e(), e(A11), e(A12), e(A11b)}
    assert lattice_points((0, 1)) == {e(), e(A12), e(A22), e(A11b), e(A22, A11b)}


def test_weyl_dim():
    assert weyl_dim((1, 0)) == 4
    assert weyl_dim((0, 1)) == 5
    assert weyl_dim((1, 1)) == 16
    assert [weyl_dim(fundamental(k, 3)) for k in (1, 2, 3)] == [6, 14, 14]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_counts_match_weyl(n):
    for lam in weights_up_to_height(n, 3):
        assert len(lattice_points(lam)) == weyl_dim(lam)


def test_minkowski_examples():
    assert minkowski_check((0, 0), (0, 0))
    assert minkowski_check((1, 0), (0, 1))
    assert minkowski_check((0, 1, 0), (0, 0, 1))


def test_poset_examples():
    n = 2
    assert poset_less(A12, A22, n) or poset_less(A22, A12, n)
    assert not poset_less(A22, A11b, n) and not poset_less(A11b, A22, n)
    assert not poset_less(A12, A12, n)


def test_antichains_count_fundamental():
    for n in (2, 3):
        for k in range(1, n + 1):
            ac = antichains(restricted_roots(k, n), n)
            assert len(ac) == len(lattice_points(fundamental(k, n)))


def test_standard_decomposition_examples():
    assert all(not any(p) for _, p in standard_decomposition(e(), (1, 1)))
    assert standard_decomposition(e(A22, A11b), (0, 1)) == [(2, e(A22, A11b))]
    parts = standard_decomposition(e(A11, A22, A11b), (1, 1))
    assert parts == [(2, e(A22, A11b)), (1, e(A11))]


@pytest.mark.parametrize("n", [2, 3])
def test_standard_decomposition_everywhere(n):
    for lam in weights_up_to_height(n, 3 if n == 2 else 2):
        for s in lattice_points(lam):
            parts = standard_decomposition(s, lam)
            total = tuple([0] * (n * n))
            for k, p in parts:
                assert in_fflv(p, fundamental(k, n))
                total = add(total, p)
            assert total == s


@given(st.tuples(st.integers(0, 2), st.integers(0, 2)), st.tuples(st.integers(0, 1), st.integers(0, 1)))
def test_minkowski_property_rank_two(lam, mu):
    assert minkowski_check(lam, mu)


def test_in_fflv_rejects_negative():
    assert not in_fflv((-1, 0, 0, 0), (1, 0))
