"""Root data of sp(2n): the barred alphabet, positive roots, root vectors,
brackets and good sequences.

Letters are stored as integer codes 1..2n with the bar of ``i`` being
``2n+1-i``, so the integer order on codes is 1 < ... < n < n-bar < ... < 1-bar.
Externally (JSON, CLI) a barred letter ``i-bar`` is written ``-i``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple, Sequence


# ---------------------------------------------------------------------------
# letters


def bar(i: int, n: int) -> int:
    return 2 * n + 1 - i


def is_barred(code: int, n: int) -> bool:
    return code > n


def to_signed(code: int, n: int) -> int:
    return code if code <= n else -bar(code, n)


def from_signed(x: int, n: int) -> int:
    if x == 0 or abs(x) > n:
        raise ValueError(f"letter {x} outside the alphabet for n={n}")
    return x if x > 0 else bar(-x, n)


def letter_str(code: int, n: int) -> str:
    return str(code) if code <= n else f"{bar(code, n)}'"


def weight_of_letter(code: int, n: int) -> tuple[int, ...]:
    """Weight of the basis vector e_code in the epsilon basis."""
    w = [0] * n
    if code <= n:
        w[code - 1] = 1
    else:
        w[bar(code, n) - 1] = -1
    return tuple(w)


# ---------------------------------------------------------------------------
# roots


class Root(NamedTuple):
    """Positive root: ``alpha_{i,j}`` (short family) or ``alpha_{i,j-bar}``.

    ``Root(i, j, False)`` with 1 <= i <= j <= n, and ``Root(i, j, True)`` with
    1 <= i <= j <= n-1.  The symbol alpha_{i,n-bar} is always stored as
    ``Root(i, n, False)``.
    """

    i: int
    j: int
    barred: bool = False

    def label(self) -> str:
        return f"a{self.i}{self.j}" + ("'" if self.barred else "")

    def key(self) -> str:
        """JSON key: ``"i,j"`` or ``"i,-j"``."""
        return f"{self.i},{-self.j if self.barred else self.j}"

    def to_json(self) -> dict:
        return {"i": self.i, "j": self.j, "barred": self.barred}

    def second_letter(self, n: int) -> int:
        """Code of the second index as a letter (alpha_{i,n} uses n)."""
        return bar(self.j, n) if self.barred else self.j


def short(i: int, j: int) -> Root:
    return Root(i, j, False)


def barred(i: int, j: int, n: int) -> Root:
    """alpha_{i,j-bar}, canonicalized (j = n gives the short alpha_{i,n})."""
    if j == n:
        return Root(i, n, False)
    return Root(i, j, True)


def root_from_key(key: str, n: int) -> Root:
    a, b = (int(x) for x in key.split(","))
    r = barred(a, -b, n) if b < 0 else short(a, b)
    check_root(r, n)
    return r


def root_from_json(obj, n: int) -> Root:
    r = barred(obj["i"], obj["j"], n) if obj["barred"] else short(obj["i"], obj["j"])
    check_root(r, n)
    return r


def root_from_letters(i: int, q: int, n: int) -> Root | None:
    """The root alpha_{i,q} for a first index ``i`` and letter code ``q``.

    Returns None when the pair does not name a positive root.
    """
    if not 1 <= i <= n or not 1 <= q <= 2 * n:
        return None
    if q <= n:
        return short(i, q) if i <= q else None
    j = bar(q, n)
    return barred(i, j, n) if i <= j else None


def check_root(r: Root, n: int) -> None:
    ok = 1 <= r.i <= r.j and (r.j <= n - 1 if r.barred else r.j <= n)
    if not ok:
        raise ValueError(f"{r} is not a canonical positive root for n={n}")


def positive_roots(n: int) -> list[Root]:
    """All n^2 positive roots: short family in lex order, then barred family."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return [short(i, j) for i in range(1, n + 1) for j in range(i, n + 1)] + [
        Root(i, j, True) for i in range(1, n) for j in range(i, n)
    ]


def simple_coords(r: Root, n: int) -> tuple[int, ...]:
    """Expansion of the root in simple roots alpha_1..alpha_n."""
    c = [0] * n
    if not r.barred:
        for k in range(r.i, r.j + 1):
            c[k - 1] = 1
    else:
        for k in range(r.i, r.j):
            c[k - 1] = 1
        for k in range(r.j, n):
            c[k - 1] = 2
        c[n - 1] = 1
    return tuple(c)


def height(r: Root, n: int) -> int:
    return sum(simple_coords(r, n))


def root_epsilon(r: Root, n: int) -> tuple[int, ...]:
    """The root in the epsilon basis (alpha_k = e_k - e_{k+1}, alpha_n = 2 e_n)."""
    c = simple_coords(r, n)
    w = [0] * n
    for k in range(n - 1):
        w[k] += c[k]
        w[k + 1] -= c[k]
    w[n - 1] += 2 * c[n - 1]
    return tuple(w)


@lru_cache(maxsize=None)
def _roots_by_coords(n: int) -> dict:
    return {simple_coords(r, n): r for r in positive_roots(n)}


def root_with_coords(coords: Sequence[int], n: int) -> Root | None:
    return _roots_by_coords(n).get(tuple(coords))


# ---------------------------------------------------------------------------
# matrices


Matrix = tuple[tuple[int, ...], ...]


def _unit(n: int, entries) -> Matrix:
    m = [[0] * (2 * n) for _ in range(2 * n)]
    for (row, col), v in entries:
        m[row - 1][col - 1] += v
    return tuple(tuple(r) for r in m)


def symplectic_form(n: int) -> Matrix:
    """Gram matrix J with <e_i, e_ibar> = 1 = -<e_ibar, e_i> for i <= n."""
    return _unit(n, [((i, bar(i, n)), 1) for i in range(1, n + 1)] + [((bar(i, n), i), -1) for i in range(1, n + 1)])


@lru_cache(maxsize=None)
def root_vector(r: Root, n: int) -> Matrix:
    """Lowering root vector f_r as a 2n x 2n integer matrix (rows = targets)."""
    check_root(r, n)
    i, j = r.i, r.j
    if r.barred:
        if i == j:
            return _unit(n, [((bar(i, n), i), 1)])
        return _unit(n, [((bar(i, n), j), 1), ((bar(j, n), i), 1)])
    if j < n:
        return _unit(n, [((j + 1, i), 1), ((bar(i, n), bar(j + 1, n)), -1)])
    if i == n:
        return _unit(n, [((bar(n, n), n), 1)])
    return _unit(n, [((bar(i, n), n), 1), ((bar(n, n), i), 1)])


def matmul(a: Matrix, b: Matrix) -> Matrix:
    size = len(a)
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(a[r], cols[c])) for c in range(size)) for r in range(size))


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a))


def matadd(a: Matrix, b: Matrix, sb: int = 1) -> Matrix:
    return tuple(tuple(x + sb * y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def in_sp(x: Matrix, n: int) -> bool:
    """X^t J + J X == 0."""
    j = symplectic_form(n)
    s = matadd(matmul(transpose(x), j), matmul(j, x))
    return not any(any(row) for row in s)


def is_strictly_lower(x: Matrix) -> bool:
    return all(x[r][c] == 0 for r in range(len(x)) for c in range(r, len(x)))


def commutator(a: Matrix, b: Matrix) -> Matrix:
    return matadd(matmul(a, b), matmul(b, a), -1)


def bracket(r1: Root, r2: Root, n: int) -> tuple[Fraction, Root] | None:
    """[f_r1, f_r2] written as c * f_gamma, or None when it vanishes."""
    com = commutator(root_vector(r1, n), root_vector(r2, n))
    zero = not any(any(row) for row in com)
    coords = [a + b for a, b in zip(simple_coords(r1, n), simple_coords(r2, n))]
    gamma = root_with_coords(coords, n)
    if zero:
        return None
    if gamma is None:
        raise ArithmeticError(f"nonzero bracket of {r1}, {r2} but their sum is not a root")
    target = root_vector(gamma, n)
    c = None
    for row_c, row_t in zip(com, target):
        for x, y in zip(row_c, row_t):
            if y == 0:
                if x != 0:
                    raise ArithmeticError("bracket is not proportional to a root vector")
                continue
            ratio = Fraction(x, y)
            if c is None:
                c = ratio
            elif c != ratio:
                raise ArithmeticError("bracket is not proportional to a root vector")
    return c, gamma


# ---------------------------------------------------------------------------
# good sequences


def root_difference_positive(a: Root, b: Root, n: int) -> bool:
    """True iff a - b is a nonzero nonnegative integer combination of roots."""
    diff = [x - y for x, y in zip(simple_coords(a, n), simple_coords(b, n))]
    return all(x >= 0 for x in diff) and any(diff)


def is_good_sequence(seq: Sequence[Root], n: int) -> bool:
    if sorted(seq) != sorted(positive_roots(n)):
        return False
    for p in range(len(seq)):
        for q in range(len(seq)):
            if p != q and root_difference_positive(seq[p], seq[q], n) and not p < q:
                return False
    return True


def good_sequence(n: int, order: Sequence[Root] | None = None) -> tuple[Root, ...]:
    """A good enumeration of the positive roots.

    Default: decreasing height, ties by (i, j, family).  For n = 2 this is
    (a_{1,1-bar}, a_{1,2}, a_{1,1}, a_{2,2}).  An explicit ``order`` is
    validated and returned.
    """
    if order is None:
        seq = sorted(positive_roots(n), key=lambda r: (-height(r, n), r.i, r.j, r.barred))
    else:
        seq = [r for r in order]
    if not is_good_sequence(seq, n):
        raise ValueError("not a good sequence")
    return tuple(seq)
