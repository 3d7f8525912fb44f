"""Closed-form minimizers s_{i,j} and s_{I,J} of the degree function.

For letters i < j, ``s_min(i, j)`` is the single root whose root vector sends
e_i to a multiple of e_j; ``s_IJ(I, J)`` pairs the letters of I \\ J and
J \\ I anti-diagonally and sums the resulting single-root exponents.
"""

from __future__ import annotations

from typing import Sequence

from .fflv import Exp, add, unit
from .lie import Root, bar, barred, short


def s_min_root(i: int, j: int, n: int) -> Root:
    """Root with f_root . e_i = +-e_j for letter codes i < j."""
    if not i < j:
        raise ValueError(f"need i < j, got {i}, {j}")
    if j <= n:
        return short(i, j - 1)
    if i <= n:
        m = bar(j, n)
        if m >= i:  # n-bar <= j <= i-bar
            return barred(i, m, n)
        return barred(m, i, n)  # j > i-bar
    a, b = bar(i, n), bar(j, n)  # both barred, b < a
    return short(b, a - 1)


def s_min(i: int, j: int, n: int) -> Exp:
    return unit(s_min_root(i, j, n), n)


def pairing(I: Sequence[int], J: Sequence[int]) -> list[tuple[int, int]]:
    """Anti-diagonal pairing (p_r, q_{s+1-r}) of I \\ J against J \\ I."""
    if len(I) != len(J):
        raise ValueError("I and J must have equal length")
    K = set(I) & set(J)
    P = sorted(x for x in I if x not in K)
    Q = sorted(x for x in J if x not in K)
    return list(zip(P, reversed(Q)))


def s_IJ_defined(I: Sequence[int], J: Sequence[int]) -> bool:
    return all(p < q for p, q in pairing(I, J))


def s_IJ(I: Sequence[int], J: Sequence[int], n: int) -> Exp:
    """s_{I,J} = s_{p_1,q_s} + ... + s_{p_s,q_1}; zero for I = J."""
    out = tuple([0] * (n * n))
    for p, q in pairing(I, J):
        if not p < q:
            raise ValueError(f"anti-diagonal pair ({p}, {q}) is not increasing")
        out = add(out, s_min(p, q, n))
    return out
