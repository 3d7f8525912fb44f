"""Symplectic Dyck paths, FFLV polytopes and their lattice points.

A multi-exponent ``s`` is a tuple of nonnegative integers aligned with
``positive_roots(n)``; ``to_sparse``/``from_sparse`` convert to root-keyed
dicts.  A dominant weight is the tuple (m_1, ..., m_n) of its coordinates in
the fundamental weights.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterable, Mapping, Sequence

from .kernel import GEQ, ConeH
from .lie import Root, positive_roots, root_from_letters, short

Exp = tuple[int, ...]


def root_index(n: int) -> dict[Root, int]:
    return {r: k for k, r in enumerate(positive_roots(n))}


def to_sparse(s: Exp, n: int) -> dict[Root, int]:
    return {r: c for r, c in zip(positive_roots(n), s) if c}


def from_sparse(d: Mapping[Root, int], n: int) -> Exp:
    idx = root_index(n)
    out = [0] * len(idx)
    for r, c in d.items():
        out[idx[r]] += c
    return tuple(out)


def unit(r: Root, n: int) -> Exp:
    return from_sparse({r: 1}, n)


def add(a: Exp, b: Exp) -> Exp:
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Exp, b: Exp) -> Exp:
    return tuple(x - y for x, y in zip(a, b))


def fundamental(k: int, n: int) -> tuple[int, ...]:
    return tuple(int(i == k) for i in range(1, n + 1))


# ---------------------------------------------------------------------------
# Dyck paths


def _next_letter(q: int, n: int) -> int:
    # n-bar names the same root as n, so the step after n is (n-1)-bar
    return n + 2 if q == n else q + 1


def dyck_steps(r: Root, n: int) -> list[Root]:
    """Roots reachable in one step: alpha_{p,q+1} and alpha_{p+1,q}."""
    p, q = r.i, r.second_letter(n)
    out = []
    nq = _next_letter(q, n)
    for cand in (root_from_letters(p, nq, n), root_from_letters(p + 1, q, n)):
        if cand is not None and cand != r:
            out.append(cand)
    return out


def is_path_end(r: Root, n: int) -> bool:
    return r.i == r.j  # simple alpha_{i,i} or long alpha_{i,i-bar}


def is_dyck_path(path: Sequence[Root], n: int) -> bool:
    if not path or path[0] != short(path[0].i, path[0].i) or not is_path_end(path[-1], n):
        return False
    return all(b in dyck_steps(a, n) for a, b in zip(path, path[1:]))


@lru_cache(maxsize=None)
def dyck_paths(n: int) -> tuple[tuple[Root, ...], ...]:
    """All symplectic Dyck paths for rank n, in DFS order."""
    out = []

    def grow(path):
        if is_path_end(path[-1], n):
            out.append(tuple(path))
        for nxt in dyck_steps(path[-1], n):
            grow(path + [nxt])

    for i in range(1, n + 1):
        grow([short(i, i)])
    return tuple(out)


def path_bound(path: Sequence[Root], lam: Sequence[int], n: int) -> int:
    i = path[0].i
    last = path[-1]
    j = n if last.barred else last.j
    return sum(lam[i - 1 : j])


def _path_masks(n: int) -> list[tuple[int, ...]]:
    idx = root_index(n)
    return [tuple(sorted(idx[r] for r in p)) for p in dyck_paths(n)]


def fflv_h(lam: Sequence[int]) -> ConeH:
    """Homogenized H-description of FFLV(lambda).

    Coordinates are (x_beta for beta in positive_roots(n), x_0); the polytope
    is the slice x_0 = 1.  Rows: x_beta >= 0 and
    bound(path) * x_0 - sum_{beta in path} x_beta >= 0.
    """
    n = len(lam)
    roots = positive_roots(n)
    dim = len(roots) + 1
    rows, labels = [], []
    for k, r in enumerate(roots):
        v = [0] * dim
        v[k] = 1
        rows.append((v, GEQ))
        labels.append(f"x[{r.label()}] >= 0")
    idx = root_index(n)
    for p in dyck_paths(n):
        v = [0] * dim
        for r in p:
            v[idx[r]] -= 1
        b = path_bound(p, lam, n)
        v[-1] = b
        rows.append((v, GEQ))
        labels.append("path " + "-".join(r.label() for r in p) + f" <= {b}")
    return ConeH(dim, rows, labels)


def in_fflv(s: Exp, lam: Sequence[int]) -> bool:
    n = len(lam)
    if any(x < 0 for x in s):
        return False
    return all(sum(s[k] for k in mask) <= path_bound(p, lam, n) for mask, p in zip(_path_masks(n), dyck_paths(n)))


@lru_cache(maxsize=None)
def lattice_points(lam: tuple[int, ...]) -> frozenset[Exp]:
    """S(lambda): integral points of FFLV(lambda), by bounded DFS."""
    lam = tuple(lam)
    n = len(lam)
    N = n * n
    masks = _path_masks(n)
    bounds = [path_bound(p, lam, n) for p in dyck_paths(n)]
    through = [[t for t, m in enumerate(masks) if k in m] for k in range(N)]
    slack = list(bounds)
    out = []
    cur = [0] * N

    def rec(k):
        if k == N:
            out.append(tuple(cur))
            return
        cap = min((slack[t] for t in through[k]), default=0)
        for v in range(cap + 1):
            cur[k] = v
            for t in through[k]:
                slack[t] -= v
            rec(k + 1)
            for t in through[k]:
                slack[t] += v
        cur[k] = 0

    rec(0)
    return frozenset(out)


def minkowski_check(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """S(lambda) + S(mu) == S(lambda + mu) as sets."""
    a, b = lattice_points(tuple(lam)), lattice_points(tuple(mu))
    total = tuple(x + y for x, y in zip(lam, mu))
    return {add(x, y) for x in a for y in b} == set(lattice_points(total))


# ---------------------------------------------------------------------------
# poset


@lru_cache(maxsize=None)
def _reach(n: int) -> dict[Root, frozenset[Root]]:
    """Roots strictly later than r on some Dyck path."""
    reach: dict[Root, frozenset[Root]] = {}

    def visit(r):
        if r not in reach:
            acc = set()
            for nxt in dyck_steps(r, n):
                acc.add(nxt)
                acc |= visit(nxt)
            reach[r] = frozenset(acc)
        return reach[r]

    for r in positive_roots(n):
        visit(r)
    return reach


def path_precedes(a: Root, b: Root, n: int) -> bool:
    """Some Dyck path visits ``b`` strictly after ``a``."""
    return b in _reach(n)[a]


def poset_less(a: Root, b: Root, n: int) -> bool:
    """a < b in the Dyck path order.

    A path is read from its larger end: a < b iff a Dyck path passes through
    ``a`` and later through ``b``.  (This orientation is the one under which
    the standard decomposition peels off elements of S(omega_k); the test
    suite checks that consequence.)
    """
    return path_precedes(a, b, n)


def restricted_roots(k: int, n: int) -> list[Root]:
    """Phi^+_k: roots alpha_{i,j} with i <= k <= j (barred j always >= k)."""
    return [r for r in positive_roots(n) if r.i <= k and (r.barred or r.j >= k)]


def maximal_elements(support: Iterable[Root], n: int) -> list[Root]:
    sup = list(support)
    return [a for a in sup if not any(poset_less(a, b, n) for b in sup if b != a)]


def antichains(roots: Sequence[Root], n: int) -> list[frozenset[Root]]:
    out = [frozenset()]
    roots = list(roots)

    def rec(start, chosen):
        for k in range(start, len(roots)):
            r = roots[k]
            if any(poset_less(r, c, n) or poset_less(c, r, n) for c in chosen):
                continue
            nxt = chosen | {r}
            out.append(frozenset(nxt))
            rec(k + 1, nxt)

    rec(0, frozenset())
    return out


def standard_decomposition(s: Exp, lam: Sequence[int]) -> list[tuple[int, Exp]]:
    """Peel s in S(lambda) into fundamental pieces (k, s_k in S(omega_k)).

    At each step k is the largest index with m_k > 0 and the piece is the
    characteristic vector of the maximal elements of supp(s) within Phi^+_k.
    """
    lam = list(lam)
    n = len(lam)
    s = tuple(s)
    if not in_fflv(s, lam):
        raise ValueError("s is not a lattice point of FFLV(lambda)")
    parts = []
    roots = positive_roots(n)
    while any(lam):
        k = max(i for i in range(1, n + 1) if lam[i - 1])
        allowed = set(restricted_roots(k, n))
        sup = [r for r, c in zip(roots, s) if c and r in allowed]
        piece = from_sparse({r: 1 for r in maximal_elements(sup, n)}, n)
        if not in_fflv(piece, fundamental(k, n)):
            raise ArithmeticError("peeled piece is not in S(omega_k)")
        parts.append((k, piece))
        s = sub(s, piece)
        lam[k - 1] -= 1
        if not in_fflv(s, lam):
            raise ArithmeticError("remainder left FFLV polytope")
    if any(s):
        raise ArithmeticError("nonzero remainder at lambda = 0")
    return parts


# ---------------------------------------------------------------------------
# Weyl dimension


def weyl_dim(lam: Sequence[int], n: int | None = None) -> int:
    """dim V_lambda for sp(2n) via the Weyl dimension formula."""
    n = len(lam) if n is None else n
    if len(lam) != n:
        raise ValueError("weight length must equal n")
    # lambda in the epsilon basis: lambda_i = m_i + ... + m_n
    lvec = [sum(lam[i:]) for i in range(n)]
    rho = [n - i for i in range(n)]
    num = Fraction(1)
    den = Fraction(1)
    pos = []
    for i in range(n):
        for j in range(i + 1, n):
            pos.append({i: 1, j: -1})
            pos.append({i: 1, j: 1})
        pos.append({i: 2})
    for a in pos:
        num *= sum(c * (lvec[k] + rho[k]) for k, c in a.items())
        den *= sum(c * rho[k] for k, c in a.items())
    q = num / den
    assert q.denominator == 1
    return int(q)


def weights_up_to_height(n: int, h: int) -> list[tuple[int, ...]]:
    """All dominant weights with 0 < ht <= h."""
    return [m for m in product(range(h + 1), repeat=n) if 0 < sum(m) <= h]
