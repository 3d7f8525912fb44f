"""Symplectic PBW(-semistandard) tableaux, strips T(J), standardization and
the maps rho_k, rho_lambda into FFLV lattice points.

A tableau is a tuple of columns, each a tuple of letter codes read from top
to bottom; columns are ordered left to right, longest first.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .chart import nu_r, p_J, t_part
from .fflv import Exp, add
from .lie import bar, from_signed, to_signed
from .minimizers import s_IJ
from .pluecker import PIndex

Column = tuple[int, ...]
Tableau = tuple[Column, ...]


def column_lengths(lam: Sequence[int]) -> list[int]:
    """Column lengths of the Young diagram with rows lambda_i = m_i + ... + m_n."""
    n = len(lam)
    out = []
    for k in range(n, 0, -1):
        out += [k] * lam[k - 1]
    return out


def shape_of(lam: Sequence[int]) -> list[int]:
    n = len(lam)
    return [sum(lam[i:]) for i in range(n)]


# ---------------------------------------------------------------------------
# conditions


def column_ok(col: Column, n: int) -> bool:
    """Conditions (i)-(iii) on a single column."""
    mu = len(col)
    if len(set(col)) != mu or not all(1 <= c <= 2 * n for c in col):
        return False
    for i, c in enumerate(col, start=1):
        if c <= mu and c != i:  # (i)
            return False
    for i1, c1 in enumerate(col, start=1):
        if c1 != i1:
            for i2 in range(i1 + 1, mu + 1):
                if not c1 > col[i2 - 1]:  # (ii)
                    return False
    for i, c in enumerate(col, start=1):
        if c == i and i <= n:
            for i2, c2 in enumerate(col, start=1):
                if c2 == bar(i, n) and not i2 < i:  # (iii)
                    return False
    return True


def adjacent_ok(left: Column, right: Column) -> bool:
    """Condition (iv) between neighbouring columns."""
    return all(any(left[i2] >= right[i] for i2 in range(i, len(left))) for i in range(len(right)))


def is_pbw(T: Tableau, n: int) -> bool:
    return all(column_ok(c, n) for c in T)


def is_semistandard(T: Tableau, n: int) -> bool:
    if not is_pbw(T, n):
        return False
    lens = [len(c) for c in T]
    if lens != sorted(lens, reverse=True):
        return False
    return all(adjacent_ok(a, b) for a, b in zip(T, T[1:]))


# ---------------------------------------------------------------------------
# strips


def strip_of(J: Sequence[int]) -> Column:
    """T(J): letters j <= |J| sit in box j, the others fill the remaining boxes
    from the bottom up in increasing order."""
    J = sorted(J)
    d = len(J)
    small = [j for j in J if j <= d]
    rest = [j for j in J if j > d]
    col: list[int | None] = [None] * d
    for j in small:
        col[j - 1] = j
    empty = [k for k in range(d) if col[k] is None]
    for k, j in zip(reversed(empty), rest):
        col[k] = j
    return tuple(col)  # type: ignore[arg-type]


def _violation(col: Column, n: int):
    for i, c in enumerate(col, start=1):
        if c == i and i <= n:
            for p, c2 in enumerate(col, start=1):
                if c2 == bar(i, n) and not p < i:
                    return i, p
    return None


def standardize(col: Column, n: int) -> Column:
    """Repair (iii): box i gets p-bar and box p gets p, until no violation."""
    col = list(col)
    while True:
        v = _violation(tuple(col), n)
        if v is None:
            return tuple(col)
        i, p = v
        col[i - 1] = bar(p, n)
        col[p - 1] = p


def content(col: Column) -> PIndex:
    return tuple(sorted(col))


@lru_cache(maxsize=None)
def pbw_strips(k: int, n: int) -> tuple[Column, ...]:
    """SyST_{omega_k}: strips T(J) that already satisfy (iii)."""
    out = []
    for J in combinations(range(1, 2 * n + 1), k):
        T = strip_of(J)
        if column_ok(T, n):
            out.append(T)
    return tuple(sorted(out))


def enumerate_tableaux(lam: Sequence[int], n: int | None = None) -> list[Tableau]:
    """All PBW-semistandard tableaux of shape lambda, column by column."""
    n = len(lam) if n is None else n
    lens = column_lengths(lam)
    out = []

    def rec(cols):
        if len(cols) == len(lens):
            out.append(tuple(cols))
            return
        for c in pbw_strips(lens[len(cols)], n):
            if cols and not adjacent_ok(cols[-1], c):
                continue
            rec(cols + [c])

    rec([])
    return out


# ---------------------------------------------------------------------------
# rho maps


def rho_k_valuation(col: Column, n: int, seq=None) -> Exp:
    """p_1(nu_{>r}(phi(X_{J(T)}))) read in the canonical root order."""
    return t_part(nu_r(p_J(n, content(col), seq)), n, seq)


def rho_k_closed(col: Column, n: int) -> Exp:
    k = len(col)
    return s_IJ(tuple(range(1, k + 1)), content(col), n)


def rho_k(col: Column, n: int, seq=None) -> Exp:
    """rho_k, computed through the chart valuation and checked against the
    closed form s_{[k],J}."""
    a = rho_k_valuation(col, n, seq)
    b = rho_k_closed(col, n)
    if a != b:
        raise ArithmeticError(f"valuation {a} disagrees with closed form {b} for {col}")
    return a


def rho_lambda(T: Tableau, n: int, seq=None) -> Exp:
    out = tuple([0] * (n * n))
    for col in T:
        out = add(out, rho_k(col, n, seq))
    return out


# ---------------------------------------------------------------------------
# serialization


def tableau_to_json(T: Tableau, n: int) -> list[list[int]]:
    return [[to_signed(c, n) for c in col] for col in T]


def tableau_from_json(data, n: int) -> Tableau:
    return tuple(tuple(from_signed(int(x), n) for x in col) for col in data)
