import random
from fractions import Fraction
from itertools import permutations

import pytest

from spfflv.chart import (
    GREEDY,
    LITERAL,
    argmin_check,
    chart_exponent,
    example_sp4_chart,
    in_d,
    m_set,
    nu_r,
    p_J,
    phi,
    phi_d,
    t_part,
    tz_ring,
)
from spfflv.cone import example_point, random_cone_point
from spfflv.fflv import unit
from spfflv.lie import Root, good_sequence, root_vector
from spfflv.minimizers import s_IJ
from spfflv.pluecker import example_sp4_degenerate, example_sp4_generators, generators, pluecker_indices, x_ring

A11, A12, A22, A11b = Root(1, 1), Root(1, 2), Root(2, 2), Root(1, 1, True)


def evaluate(p, values):
    total = Fraction(0)
    for e, c in p.terms.items():
        term = c
        for v, k in zip(values, e):
            term *= v**k
        total += term
    return total


def exp_matrix(f, t):
    size = len(f)
    out = [[Fraction(int(r == c)) for c in range(size)] for r in range(size)]
    power = [[Fraction(x) for x in row] for row in f]
    k = 1
    fact = 1
    while any(any(row) for row in power):
        fact *= k
        for r in range(size):
            for c in range(size):
                out[r][c] += power[r][c] * t**k / fact
        power = [[sum(power[r][q] * f[q][c] for q in range(size)) for c in range(size)] for r in range(size)]
        k += 1
    return out


def det(m):
    total = Fraction(0)
    for p in permutations(range(len(m))):
        inv = sum(1 for a in range(len(p)) for b in range(a + 1, len(p)) if p[a] > p[b])
        term = Fraction((-1) ** inv)
        for r, c in enumerate(p):
            term *= m[r][c]
        total += term
    return total


@pytest.mark.parametrize("n", [2, 3])
def test_p_J_against_numeric_minors(n):
    rng = random.Random(5)
    seq = good_sequence(n)
    ts = [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in seq]
    size = 2 * n
    x = [[Fraction(int(r == c)) for c in range(size)] for r in range(size)]
    for beta, t in zip(seq, ts):
        e = exp_matrix(root_vector(beta, n), t)
        x = [[sum(x[r][q] * e[q][c] for q in range(size)) for c in range(size)] for r in range(size)]
    values = ts + [Fraction(1)] * n
    for J in pluecker_indices(n):
        minor = [[x[j - 1][c] for c in range(len(J))] for j in J]
        assert evaluate(p_J(n, J), values) == det(minor)


def test_rank_two_chart_table():
    full, degenerate = example_sp4_chart()
    d = example_point()
    for J in pluecker_indices(2):
        assert p_J(2, J) == full[J]
        assert in_d(p_J(2, J), d) == degenerate[J]


def test_identity_minors():
    R = tz_ring(3)
    for k in (1, 2, 3):
        assert p_J(3, tuple(range(1, k + 1))) == R.var(9 + k - 1)


def test_in_d_at_zero_is_identity():
    from spfflv.cone import DegreePoint

    zero = DegreePoint(2, [0] * 4)
    for J in pluecker_indices(2):
        assert in_d(p_J(2, J), zero) == p_J(2, J)


@pytest.mark.parametrize("n", [2, 3])
def test_phi_kills_generators(n):
    for g in generators(n):
        assert not phi(g, n)


def test_phi_rank_two_examples():
    for g in example_sp4_generators():
        assert not phi(g, 2)
    for r in example_sp4_degenerate():
        assert not phi_d(r, example_point())
    with pytest.raises(ValueError):
        phi(tz_ring(2).one(), 2)


def test_phi_d_commutes_with_initial_forms():
    # phi^d(X_J) is in_d(phi(X_J)) and phi^d is multiplicative
    d = example_point()
    X = x_ring(2)
    for a in range(10):
        for b in range(10):
            m = X.var(a) * X.var(b)
            assert phi_d(m, d) == in_d(phi(m, 2), d)


def test_valuation_examples():
    p = p_J(2, (4,))  # (t1 + t2 t3) z1
    assert nu_r(p, GREEDY) == nu_r(p, LITERAL) == (1, 0, 0, 0, 1, 0)
    q = p_J(2, (3, 4))
    assert t_part(nu_r(q, GREEDY), 2) == s_IJ((1, 2), (3, 4), 2)
    # the last-coordinate reading picks t2^2 here, which is not s_{[2],J}
    assert nu_r(q, LITERAL)[:4] == (0, 2, 0, 0)
    with pytest.raises(ValueError):
        nu_r(q, "other")


@pytest.mark.parametrize("n", [2, 3])
def test_valuation_matches_minimizers(n):
    for J in pluecker_indices(n):
        k = len(J)
        assert t_part(nu_r(p_J(n, J)), n) == s_IJ(tuple(range(1, k + 1)), J, n)


def test_chart_exponent_round_trip():
    s = (1, 2, 3, 4)
    e = chart_exponent(s, 2)
    assert t_part(e + (0, 0), 2) == s


def test_m_set_examples():
    assert m_set((1,), (1,), 2) == {(0, 0, 0, 0)}
    M = m_set((1,), (4,), 2)
    assert unit(A11b, 2) in M
    assert tuple(a + b for a, b in zip(unit(A11, 2), unit(A12, 2))) in M


def test_argmin_examples():
    d = example_point()
    assert argmin_check((1,), (4,), d)
    assert argmin_check((1, 2), (1, 2), d)


@pytest.mark.parametrize("n", [2, 3])
def test_argmin_random_interior(n):
    from spfflv.verify import minimizer_cases

    rng = random.Random(n)
    cases = minimizer_cases(n)
    for _ in range(3):
        d = random_cone_point(n, rng, interior=True)
        for I, J in cases:
            assert argmin_check(I, J, d)
