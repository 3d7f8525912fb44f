"""The birational chart x = exp(t_1 f_{beta_1}) ... exp(t_N f_{beta_N}),
the polynomials p_J, the maps phi and phi^d, the valuation nu_{>r} and the
sets M_I^J.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Sequence

from .cone import DegreePoint, degree_of
from .fflv import Exp, from_sparse
from .kernel import Ring, SparsePoly, initial_form
from .lie import (
    Root,
    good_sequence,
    positive_roots,
    root_vector,
    simple_coords,
    weight_of_letter,
)
from .minimizers import s_IJ
from .pluecker import PIndex, pluecker_indices, x_ring


@lru_cache(maxsize=None)
def tz_ring(n: int) -> Ring:
    N = n * n
    return Ring(f"TZ{n}", [f"t{i}" for i in range(1, N + 1)] + [f"z{k}" for k in range(1, n + 1)])


def _sequence(n: int, seq) -> tuple[Root, ...]:
    return good_sequence(n) if seq is None else good_sequence(n, seq)


@lru_cache(maxsize=None)
def chart_matrix(n: int, seq: tuple[Root, ...] | None = None) -> tuple[tuple[SparsePoly, ...], ...]:
    """x = prod_i exp(t_i f_{beta_i}) as a 2n x 2n matrix of polynomials."""
    seq = _sequence(n, seq)
    ring = tz_ring(n)
    size = 2 * n
    one, zero = ring.one(), ring.zero()
    x = [[one if r == c else zero for c in range(size)] for r in range(size)]
    for k, beta in enumerate(seq):
        f = root_vector(beta, n)
        t = ring.var(k)
        # exp(t f) by the truncated series; f is nilpotent
        factor = [[one if r == c else zero for c in range(size)] for r in range(size)]
        power = [list(row) for row in f]
        term_coeff = Fraction(1)
        m = 1
        while any(any(row) for row in power):
            term_coeff /= m
            tp = t**m * term_coeff
            for r in range(size):
                for c in range(size):
                    if power[r][c]:
                        factor[r][c] = factor[r][c] + tp * power[r][c]
            power = [[sum(power[r][q] * f[q][c] for q in range(size)) for c in range(size)] for r in range(size)]
            m += 1
        x = [
            [sum((x[r][q] * factor[q][c] for q in range(size) if x[r][q] and factor[q][c]), zero) for c in range(size)]
            for r in range(size)
        ]
    return tuple(tuple(row) for row in x)


def _perm_sign(p) -> int:
    inv = sum(1 for a in range(len(p)) for b in range(a + 1, len(p)) if p[a] > p[b])
    return -1 if inv % 2 else 1


def _minor(x, rows: Sequence[int], cols: Sequence[int], ring: Ring) -> SparsePoly:
    out = ring.zero()
    for p in permutations(range(len(cols))):
        term = ring.one() * _perm_sign(p)
        for r, c in zip(rows, p):
            entry = x[r][cols[c]]
            if not entry:
                term = None
                break
            term = term * entry
        if term is not None:
            out = out + term
    return out


@lru_cache(maxsize=None)
def p_J(n: int, J: PIndex, seq: tuple[Root, ...] | None = None) -> SparsePoly:
    """Coefficient of e_J in x . (e_1 ^ ... ^ e_k), times z_k."""
    J = tuple(J)
    k = len(J)
    ring = tz_ring(n)
    x = chart_matrix(n, seq)
    minor = _minor(x, [j - 1 for j in J], list(range(k)), ring)
    return minor * ring.var(n * n + k - 1)


def in_d(p: SparsePoly, d: DegreePoint, seq: tuple[Root, ...] | None = None) -> SparsePoly:
    """Terms of p minimising sum_i r_i d_{beta_i} (z has degree 0)."""
    seq = _sequence(d.n, seq)
    weights = [d[beta] for beta in seq] + [Fraction(0)] * d.n
    return initial_form(p, weights)


def phi(f: SparsePoly, n: int, seq=None) -> SparsePoly:
    """Algebra morphism X_J -> p_J."""
    if f.ring != x_ring(n):
        raise ValueError("phi expects a polynomial in the Plücker variables")
    images = [p_J(n, J, seq) for J in pluecker_indices(n)]
    return f.subs(images, tz_ring(n))


def phi_d_images(d: DegreePoint, seq=None) -> list[SparsePoly]:
    n = d.n
    return [in_d(p_J(n, J, seq), d, seq) for J in pluecker_indices(n)]


def phi_d(f: SparsePoly, d: DegreePoint, seq=None) -> SparsePoly:
    """Algebra morphism X_J -> in_d(p_J)."""
    return f.subs(phi_d_images(d, seq), tz_ring(d.n))


GREEDY = "greedy"
LITERAL = "literal"


def nu_r(p: SparsePoly, convention: str = GREEDY) -> tuple[int, ...]:
    """Extremal exponent of p under the chart valuation.

    ``greedy``: the exponent maximal for the lexicographic order starting at
    t_1, i.e. the one taking as much of beta_1 as possible, then beta_2, and
    so on.  ``literal``: the exponent minimal when two exponents are compared
    by the sign of the last nonzero coordinate of their difference.  The two
    agree on p_{1-bar} but not on every p_J (see the tests); only the greedy
    rule reproduces s_{[k],J}.
    """
    if not p:
        raise ValueError("valuation of the zero polynomial")
    if convention == GREEDY:
        return min(p.terms, key=lambda e: tuple(-x for x in e))
    if convention == LITERAL:
        return min(p.terms, key=lambda e: tuple(reversed(e)))
    raise ValueError(f"unknown convention {convention!r}")


def t_part(exp: Sequence[int], n: int, seq=None) -> Exp:
    """Project a (t, z) exponent onto t and reorder from the good sequence to
    the canonical root order."""
    seq = _sequence(n, seq)
    return from_sparse({beta: a for beta, a in zip(seq, exp[: n * n]) if a}, n)


def chart_exponent(s: Exp, n: int, seq=None) -> tuple[int, ...]:
    """Canonical multi-exponent s laid out in good-sequence order."""
    seq = _sequence(n, seq)
    idx = {r: k for k, r in enumerate(positive_roots(n))}
    return tuple(s[idx[beta]] for beta in seq)


# ---------------------------------------------------------------------------
# action on exterior powers and M_I^J


Wedge = dict[tuple[int, ...], int]


def _apply_root(f, vec: Wedge) -> Wedge:
    out: Wedge = {}
    size = len(f)
    for basis, c in vec.items():
        for pos, col in enumerate(basis):
            for row in range(size):
                a = f[row][col - 1]
                if not a:
                    continue
                new = list(basis)
                new[pos] = row + 1
                if len(set(new)) != len(new):
                    continue
                inv = sum(1 for x in range(len(new)) for y in range(x + 1, len(new)) if new[x] > new[y])
                key = tuple(sorted(new))
                out[key] = out.get(key, 0) + (-1) ** inv * a * c
    return {k: v for k, v in out.items() if v}


def act(s: Exp, I: Sequence[int], n: int, seq=None) -> Wedge:
    """f^s . e_I with f^s = f_{beta_1}^{s_1} ... f_{beta_N}^{s_N} in
    good-sequence order (the rightmost factor acts first)."""
    seq = _sequence(n, seq)
    idx = {r: k for k, r in enumerate(positive_roots(n))}
    vec: Wedge = {tuple(sorted(I)): 1}
    for beta in reversed(seq):
        f = root_vector(beta, n)
        for _ in range(s[idx[beta]]):
            vec = _apply_root(f, vec)
            if not vec:
                return vec
    return vec


def weight_of_index(J: Sequence[int], n: int) -> tuple[int, ...]:
    w = [0] * n
    for c in J:
        w = [a + b for a, b in zip(w, weight_of_letter(c, n))]
    return tuple(w)


def epsilon_to_simple(w: Sequence[int], n: int) -> tuple[Fraction, ...]:
    """Coordinates of an epsilon-basis weight in simple roots."""
    # alpha_k = e_k - e_{k+1}, alpha_n = 2 e_n  =>  e_k = alpha_k + ... + alpha_{n-1} + alpha_n / 2
    c = [Fraction(0)] * n
    for k, a in enumerate(w):
        for m in range(k, n - 1):
            c[m] += a
        c[n - 1] += Fraction(a, 2)
    return tuple(c)


def weight_solutions(target: Sequence[int], n: int) -> list[Exp]:
    """All s in N^{Phi+} with sum_beta s_beta beta = target (simple coords)."""
    roots = positive_roots(n)
    coords = [simple_coords(r, n) for r in roots]
    out = []
    cur = [0] * len(roots)

    def rec(k, rem):
        if k == len(roots):
            if not any(rem):
                out.append(tuple(cur))
            return
        c = coords[k]
        cap = min(rem[m] // c[m] for m in range(n) if c[m])
        for v in range(cap, -1, -1):
            cur[k] = v
            rec(k + 1, [r - v * x for r, x in zip(rem, c)])
        cur[k] = 0

    if any(x < 0 for x in target):
        return []
    rec(0, list(target))
    return out


def m_set(I: Sequence[int], J: Sequence[int], n: int, seq=None) -> set[Exp]:
    """M_I^J = {s : e_J^*(f^s . e_I) != 0}, exhaustive."""
    if len(I) != len(J):
        raise ValueError("I and J must have equal length")
    wI, wJ = weight_of_index(I, n), weight_of_index(J, n)
    diff = epsilon_to_simple([a - b for a, b in zip(wI, wJ)], n)
    if any(x.denominator != 1 for x in diff):
        return set()
    target = [int(x) for x in diff]
    key = tuple(sorted(J))
    return {s for s in weight_solutions(target, n) if act(s, I, n, seq).get(key, 0)}


def argmin_check(I, J, d: DegreePoint, seq=None, strict: bool = True) -> bool:
    """s_{I,J} minimises the degree on M_I^J (uniquely when ``strict``)."""
    n = d.n
    M = m_set(I, J, n, seq)
    target = s_IJ(I, J, n)
    if target not in M:
        return False
    best = degree_of(target, d)
    for s in M:
        v = degree_of(s, d)
        if v < best or (strict and v == best and s != target):
            return False
    return True


# ---------------------------------------------------------------------------
# serialization helpers


def parse_poly(text_or_json, n: int) -> SparsePoly:
    """Polynomial in the Plücker variables from its JSON form."""
    return SparsePoly.from_json(text_or_json, x_ring(n))


def images_table(d: DegreePoint | None, n: int, seq=None) -> dict[str, SparsePoly]:
    from .pluecker import index_key

    out = {}
    for J in pluecker_indices(n):
        p = p_J(n, J, seq)
        out[index_key(J, n)] = p if d is None else in_d(p, d, seq)
    return out


def example_sp4_chart() -> tuple[dict[PIndex, SparsePoly], dict[PIndex, SparsePoly]]:
    """The rank 2 chart images phi(X_J) and phi^d(X_J) at the interior point
    d11 = 3, d22 = 1, d12 = 2, d11' = 1, as usually displayed."""
    R = tz_ring(2)
    t1, t2, t3, t4, z1, z2 = (R.var(k) for k in range(6))
    full = {
        (1,): z1,
        (2,): t3 * z1,
        (3,): t2 * z1,
        (4,): (t1 + t2 * t3) * z1,
        (1, 2): z2,
        (1, 3): t4 * z2,
        (1, 4): (t2 - t3 * t4) * z2,
        (2, 3): (t3 * t4 - t2) * z2,
        (2, 4): -(t1 + t3**2 * t4) * z2,
        (3, 4): (t2**2 - t1 * t4 - t2 * t3 * t4 * 2) * z2,
    }
    degenerate = {
        (1,): z1,
        (2,): t3 * z1,
        (3,): t2 * z1,
        (4,): t1 * z1,
        (1, 2): z2,
        (1, 3): t4 * z2,
        (1, 4): t2 * z2,
        (2, 3): -t2 * z2,
        (2, 4): -t1 * z2,
        (3, 4): -t1 * t4 * z2,
    }
    return full, degenerate
