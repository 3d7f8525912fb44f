"""Plücker coordinates of the symplectic flag variety and its defining ideal.

Variables X_J are indexed by strictly increasing tuples J of letter codes of
length 1..n.  The ring is multigraded by deg X_J = omega_{|J|}.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .kernel import Ring, SparsePoly
from .lie import bar, from_signed, to_signed

PIndex = tuple[int, ...]


@lru_cache(maxsize=None)
def pluecker_indices(n: int) -> tuple[PIndex, ...]:
    """All increasing tuples of length 1..n, by size then lexicographically."""
    return tuple(J for k in range(1, n + 1) for J in combinations(range(1, 2 * n + 1), k))


def index_key(J: Sequence[int], n: int) -> str:
    """External form: comma-joined signed letters, e.g. ``"1,2,-1"``."""
    return ",".join(str(to_signed(c, n)) for c in J)


def index_from_key(key: str, n: int) -> PIndex:
    J = tuple(from_signed(int(x), n) for x in key.split(","))
    if list(J) != sorted(set(J)):
        raise ValueError(f"index {key!r} is not strictly increasing")
    return J


def var_name(J: Sequence[int], n: int) -> str:
    return "X[" + index_key(J, n) + "]"


@lru_cache(maxsize=None)
def x_ring(n: int) -> Ring:
    return Ring(f"X{n}", [var_name(J, n) for J in pluecker_indices(n)])


@lru_cache(maxsize=None)
def _position(n: int) -> dict:
    return {J: k for k, J in enumerate(pluecker_indices(n))}


def var_index(J: Sequence[int], n: int) -> int:
    return _position(n)[tuple(J)]


def normalize(raw: Sequence[int]) -> tuple[int, PIndex]:
    """Sort a tuple of letters, returning (sign, sorted tuple); sign 0 on repeats."""
    raw = list(raw)
    if len(set(raw)) != len(raw):
        return 0, tuple(sorted(raw))
    inv = sum(1 for a in range(len(raw)) for b in range(a + 1, len(raw)) if raw[a] > raw[b])
    return (-1) ** inv, tuple(sorted(raw))


def X(raw: Sequence[int], n: int) -> SparsePoly:
    """X_raw with the antisymmetric extension to unordered tuples."""
    sign, J = normalize(raw)
    ring = x_ring(n)
    if sign == 0:
        return ring.zero()
    return ring.var(var_index(J, n)) * sign


def multidegree(exp: Sequence[int], n: int) -> tuple[int, ...]:
    m = [0] * n
    for a, J in zip(exp, pluecker_indices(n)):
        if a:
            m[len(J) - 1] += a
    return tuple(m)


def poly_multidegrees(f: SparsePoly, n: int) -> set[tuple[int, ...]]:
    return {multidegree(e, n) for e in f.terms}


def is_multihomogeneous(f: SparsePoly, n: int) -> bool:
    return len(poly_multidegrees(f, n)) <= 1


# ---------------------------------------------------------------------------
# quadratic relations


def _check_increasing(t: Sequence[int], n: int):
    if list(t) != sorted(set(t)) or not t or not all(1 <= c <= 2 * n for c in t):
        raise ValueError(f"{tuple(t)} is not a strictly increasing tuple of letters")


def quad_relation(L: Sequence[int], J: Sequence[int], s: int, n: int) -> SparsePoly:
    """R^s_{L,J} = X_L X_J - sum_{r_1<...<r_s} X_{L'} X_{J'}.

    L' replaces l_{r_1}, ..., l_{r_s} by j_1, ..., j_s in place and
    J' = (l_{r_1}, ..., l_{r_s}, j_{s+1}, ..., j_q).
    """
    L, J = tuple(L), tuple(J)
    _check_increasing(L, n)
    _check_increasing(J, n)
    p, q = len(L), len(J)
    if not (1 <= s <= q <= p <= n):
        raise ValueError("need 1 <= s <= |J| <= |L| <= n")
    out = X(L, n) * X(J, n)
    for rs in combinations(range(p), s):
        Lp = list(L)
        for t, r in enumerate(rs):
            Lp[r] = J[t]
        Jp = [L[r] for r in rs] + list(J[s:])
        out = out - X(Lp, n) * X(Jp, n)
    return out


def quadratic_relations(n: int) -> list[SparsePoly]:
    out = []
    idx = pluecker_indices(n)
    for L in idx:
        for J in idx:
            if len(J) > len(L):
                continue
            for s in range(1, len(J) + 1):
                f = quad_relation(L, J, s, n)
                if f:
                    out.append(f)
    return out


# ---------------------------------------------------------------------------
# linear relations


def dominated(T: Sequence[int], G: Sequence[int]) -> bool:
    """T <= G in the dominance order on equal-size sorted sets."""
    T, G = sorted(T), sorted(G)
    return len(T) == len(G) and all(a <= b for a, b in zip(T, G))


def reverse_admissible(I1: Iterable[int], I2: Iterable[int], n: int) -> bool:
    I1, I2 = set(I1), set(I2)
    gamma = sorted(I1 & I2)
    if not gamma:
        return True
    free = [x for x in range(1, n + 1) if x not in I1 | I2]
    return any(dominated(T, gamma) for T in combinations(free, len(gamma)))


def pair_tuple(I1: Iterable[int], I2: Iterable[int], n: int) -> tuple[int, ...]:
    """(gamma_1, gamma_1-bar, ..., a_1, ..., a_r, b_last-bar, ..., b_1-bar)."""
    I1, I2 = set(I1), set(I2)
    gamma = sorted(I1 & I2)
    a = sorted(I1 - I2)
    b = sorted(I2 - I1)
    out = []
    for g in gamma:
        out += [g, bar(g, n)]
    out += a
    out += [bar(x, n) for x in reversed(b)]
    return tuple(out)


def X_pair(I1, I2, n: int) -> SparsePoly:
    return X(pair_tuple(I1, I2, n), n)


def _maximal_dominance(cands: list[tuple[int, ...]]) -> tuple[int, ...]:
    maxi = [T for T in cands if not any(U != T and dominated(T, U) for U in cands)]
    if len(maxi) != 1:
        raise ArithmeticError("no unique maximal companion set")
    return maxi[0]


def linear_relation(I1: Iterable[int], I2: Iterable[int], n: int) -> SparsePoly:
    """S_{(I1,I2)} for a non-reverse-admissible pair of subsets of [n]."""
    I1, I2 = set(I1), set(I2)
    if len(I1) + len(I2) > n or not (I1 | I2) <= set(range(1, n + 1)):
        raise ValueError("need I1, I2 subsets of [n] with |I1| + |I2| <= n")
    if reverse_admissible(I1, I2, n):
        raise ValueError("pair is reverse-admissible; no linear relation")
    gamma = sorted(I1 & I2)
    t = len(gamma)
    free = [x for x in range(1, n + 1) if x not in I1 | I2]

    def companions(h):
        # T of size t - h dominated by (gamma_{h+1}, ..., gamma_t)
        tail = gamma[h:]
        return [T for T in combinations(free, t - h) if dominated(T, tail)]

    h0 = next(h for h in range(1, t + 1) if companions(h))
    lam = _maximal_dominance(companions(h0))  # (lambda_{h0+1}, ..., lambda_t)
    b = h0
    for cand in range(h0 + 1, t + 1):
        if dominated(lam[: cand - h0], gamma[h0 - 1 : cand - 1]):
            b = cand
    tilde = gamma[h0 - 1 : b]
    F = set(gamma) - set(tilde)
    rest1 = I1 - set(gamma)
    rest2 = I2 - set(gamma)
    total = X_pair(I1, I2, n)
    sign = (-1) ** (b - h0 + 1)
    for gp in combinations(free, len(tilde)):
        gp = set(gp)
        total = total - X_pair(rest1 | F | gp, rest2 | F | gp, n) * sign
    return total


def linear_relations(n: int) -> list[SparsePoly]:
    out = []
    subsets = [set(c) for k in range(n + 1) for c in combinations(range(1, n + 1), k)]
    for I1 in subsets:
        for I2 in subsets:
            if len(I1) + len(I2) > n or not I1 & I2:
                continue
            if not reverse_admissible(I1, I2, n):
                out.append(linear_relation(I1, I2, n))
    return out


def _dedupe(polys: Iterable[SparsePoly]) -> list[SparsePoly]:
    seen = set()
    out = []
    for f in polys:
        if not f:
            continue
        g = f.scaled_primitive()
        if g in seen:
            continue
        seen.add(g)
        out.append(f)
    return out


@lru_cache(maxsize=None)
def generators(n: int) -> tuple[SparsePoly, ...]:
    """All quadratic relations R^s_{L,J} and all linear relations S, deduplicated
    up to scalar."""
    return tuple(_dedupe(quadratic_relations(n) + linear_relations(n)))


def example_sp4_generators() -> list[SparsePoly]:
    """The six generators of the rank 2 ideal as usually displayed."""
    n = 2
    one, two, twob, oneb = 1, 2, 3, 4
    x = lambda *t: X(t, n)
    return [
        x(one, two) * x(twob) + x(two, twob) * x(one) - x(one, twob) * x(two),
        x(one, twob) * x(oneb) + x(twob, oneb) * x(one) - x(one, oneb) * x(twob),
        x(two, twob) * x(oneb) + x(twob, oneb) * x(two) - x(two, oneb) * x(twob),
        x(one, two) * x(oneb) + x(two, oneb) * x(one) - x(one, oneb) * x(two),
        x(one, two) * x(twob, oneb) - x(one, twob) * x(two, oneb) + x(one, oneb) * x(two, twob),
        x(one, oneb) + x(two, twob),
    ]


def monomials_of_degree(lam: Sequence[int], n: int) -> list[tuple[int, ...]]:
    """All exponent vectors over X of multidegree lam."""
    idx = pluecker_indices(n)
    groups = [[var_index(J, n) for J in idx if len(J) == k] for k in range(1, n + 1)]
    parts = [[()]]
    for k, m in enumerate(lam):
        parts.append(list(_multisets(groups[k], m)))
    out = []

    def rec(level, acc):
        if level == len(parts):
            e = [0] * len(idx)
            for v in acc:
                e[v] += 1
            out.append(tuple(e))
            return
        for choice in parts[level]:
            rec(level + 1, acc + list(choice))

    rec(0, [])
    return sorted(set(out))


def _multisets(items, m):
    if m == 0:
        yield ()
        return
    for k, x in enumerate(items):
        for rest in _multisets(items[k:], m - 1):
            yield (x,) + rest


def example_sp4_degenerate() -> list[SparsePoly]:
    """The six rank 2 relations annihilated by the degenerate chart map at the
    interior point d11 = 3, d22 = 1, d12 = 2, d11' = 1."""
    n = 2
    one, two, twob, oneb = 1, 2, 3, 4
    x = lambda *t: X(t, n)
    return [
        x(one, two) * x(twob) + x(two, twob) * x(one),
        x(one, twob) * x(oneb) + x(twob, oneb) * x(one),
        x(two, twob) * x(oneb) - x(two, oneb) * x(twob),
        x(one, two) * x(oneb) + x(two, oneb) * x(one),
        x(one, two) * x(twob, oneb) - x(one, twob) * x(two, oneb),
        x(one, oneb) + x(two, twob),
    ]
