"""Exact arithmetic kernel: sparse polynomials, initial forms, rational
linear algebra and polyhedral cone primitives.

Everything here works over :class:`fractions.Fraction`; no floating point is
used anywhere, so ties in initial forms and tightness of inequalities are
decided exactly.
"""

from __future__ import annotations

import json
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence

Exponent = tuple[int, ...]

EQ = "EQ"
GEQ = "GEQ"


def as_fraction(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass an int, Fraction or 'p/q' string")
    return Fraction(x)


def frac_str(x: Fraction) -> str:
    x = as_fraction(x)
    return f"{x.numerator}/{x.denominator}"


# ---------------------------------------------------------------------------
# polynomials


class Ring:
    """A variable universe: an ordered tuple of variable names plus a tag.

    Two rings are the same iff tag and names agree.  Polynomials may only be
    combined within one ring.
    """

    __slots__ = ("tag", "names", "_index")

    def __init__(self, tag: str, names: Sequence[str]):
        self.tag = tag
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate variable names")
        self._index = {name: i for i, name in enumerate(self.names)}

    @property
    def nvars(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        return self._index[name]

    def var(self, name_or_index) -> "SparsePoly":
        i = name_or_index if isinstance(name_or_index, int) else self._index[name_or_index]
        e = [0] * self.nvars
        e[i] = 1
        return SparsePoly(self, {tuple(e): Fraction(1)})

    def zero(self) -> "SparsePoly":
        return SparsePoly(self, {})

    def one(self) -> "SparsePoly":
        return SparsePoly(self, {(0,) * self.nvars: Fraction(1)})

    def monomial(self, exp: Exponent, coeff=1) -> "SparsePoly":
        return SparsePoly(self, {tuple(exp): as_fraction(coeff)})

    def __eq__(self, other):
        return isinstance(other, Ring) and self.tag == other.tag and self.names == other.names

    def __hash__(self):
        return hash((self.tag, self.names))

    def __repr__(self):
        return f"Ring({self.tag!r}, {len(self.names)} vars)"


class UniverseMismatch(ValueError):
    pass


class SparsePoly:
    """Multivariate polynomial with exact rational coefficients.

    ``terms`` maps exponent tuples (one entry per ring variable) to nonzero
    Fractions.  Instances are treated as immutable.
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms: Mapping[Exponent, Fraction] | None = None):
        self.ring = ring
        clean = {}
        for e, c in (terms or {}).items():
            c = as_fraction(c)
            if c:
                if len(e) != ring.nvars:
                    raise UniverseMismatch("exponent length does not match ring")
                clean[tuple(e)] = c
        self.terms = clean

    # -- basic protocol
    def _check(self, other: "SparsePoly"):
        if self.ring != other.ring:
            raise UniverseMismatch(f"{self.ring!r} vs {other.ring!r}")

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, SparsePoly):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == self.ring.one() * other
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.one() * other
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return SparsePoly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return SparsePoly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, str)):
            c0 = as_fraction(other)
            return SparsePoly(self.ring, {e: c * c0 for e, c in self.terms.items()})
        self._check(other)
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return SparsePoly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- inspection
    def monomials(self) -> list[Exponent]:
        return sorted(self.terms)

    def coefficient(self, exp: Exponent) -> Fraction:
        return self.terms.get(tuple(exp), Fraction(0))

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def variables(self) -> set[int]:
        return {i for e in self.terms for i, a in enumerate(e) if a}

    def subs(self, images: Sequence["SparsePoly"], target: Ring) -> "SparsePoly":
        """Algebra morphism sending variable ``i`` to ``images[i]``."""
        if len(images) != self.ring.nvars:
            raise UniverseMismatch("need one image per variable")
        cache: dict[tuple[int, int], SparsePoly] = {}
        out = target.zero()
        for e, c in self.terms.items():
            term = target.one() * c
            for i, a in enumerate(e):
                if a:
                    key = (i, a)
                    if key not in cache:
                        cache[key] = images[i] ** a
                    term = term * cache[key]
            out = out + term
        return out

    def scaled_primitive(self) -> "SparsePoly":
        """Divide by the leading coefficient in the canonical term order."""
        if not self.terms:
            return self
        c = self.terms[max(self.terms)]
        return self * (1 / c)

    # -- serialization
    def to_json(self) -> dict:
        terms = []
        for e in sorted(self.terms, reverse=True):
            powers = [[self.ring.names[i], a] for i, a in enumerate(e) if a]
            terms.append({"coeff": frac_str(self.terms[e]), "exponent": powers})
        return {"universe": self.ring.tag, "terms": terms}

    @classmethod
    def from_json(cls, data: Mapping, ring: Ring) -> "SparsePoly":
        if data.get("universe", ring.tag) != ring.tag:
            raise UniverseMismatch(f"universe {data.get('universe')!r} is not {ring.tag!r}")
        out = {}
        for term in data["terms"]:
            e = [0] * ring.nvars
            for name, power in term["exponent"]:
                e[ring.index(name)] += int(power)
            e = tuple(e)
            out[e] = out.get(e, 0) + as_fraction(term["coeff"])
        return cls(ring, out)

    def __repr__(self):
        return f"SparsePoly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                self.ring.names[i] + (f"^{a}" if a > 1 else "") for i, a in enumerate(e) if a
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def weight_of(exp: Exponent, v: Sequence[Fraction]) -> Fraction:
    return sum((a * w for a, w in zip(exp, v) if a), Fraction(0))


def initial_form(f: SparsePoly, v) -> SparsePoly:
    """Sum of the terms of ``f`` whose exponent ``u`` minimises ``u . v``.

    ``v`` is either a sequence aligned with the ring variables or a mapping
    from variable name to weight; every variable occurring in ``f`` needs a
    weight.
    """
    if isinstance(v, Mapping):
        try:
            vec = [as_fraction(v[name]) if name in v else None for name in f.ring.names]
        except KeyError as exc:  # pragma: no cover - defensive
            raise UniverseMismatch(str(exc)) from exc
    else:
        vec = [as_fraction(x) for x in v]
        if len(vec) != f.ring.nvars:
            raise UniverseMismatch("weight vector length does not match ring")
    for i in f.variables():
        if vec[i] is None:
            raise UniverseMismatch(f"no weight for variable {f.ring.names[i]}")
    if not f.terms:
        return f
    vec = [x if x is not None else Fraction(0) for x in vec]
    scores = {e: weight_of(e, vec) for e in f.terms}
    best = min(scores.values())
    return SparsePoly(f.ring, {e: c for e, c in f.terms.items() if scores[e] == best})


# ---------------------------------------------------------------------------
# rational linear algebra


def _to_matrix(rows) -> list[list[Fraction]]:
    return [[as_fraction(x) for x in row] for row in rows]


def rref(matrix) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and pivot columns (deterministic)."""
    m = _to_matrix(matrix)
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                factor = m[i][c]
                m[i] = [a - factor * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(matrix) -> int:
    return len(rref(matrix)[1])


def kernel_basis(matrix, ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of the right kernel ``{x : M x = 0}``, one vector per free column.

    ``ncols`` must be given when the matrix has no rows.
    """
    m = _to_matrix(matrix)
    if ncols is None:
        if not m:
            raise ValueError("ncols required for an empty matrix")
        ncols = len(m[0])
    if not m:
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    red, pivots = rref(m)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, p in zip(red, pivots):
            x[p] = -row[f]
        basis.append(x)
    return basis


def solve(matrix, rhs) -> list[Fraction] | None:
    """A particular solution of ``M x = rhs`` (free variables set to 0)."""
    m = _to_matrix(matrix)
    if not m:
        return None
    ncols = len(m[0])
    aug = [row + [as_fraction(b)] for row, b in zip(m, rhs)]
    red, pivots = rref(aug)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for row, p in zip(red, pivots):
        x[p] = row[-1]
    return x


def in_row_space(vector, rows) -> bool:
    rows = _to_matrix(rows)
    if not rows:
        return all(as_fraction(x) == 0 for x in vector)
    return rank(rows + [list(vector)]) == rank(rows)


def dot(a, b) -> Fraction:
    return sum((as_fraction(x) * as_fraction(y) for x, y in zip(a, b)), Fraction(0))


def primitive_integer(vec) -> tuple[int, ...]:
    """Positive rescaling of a rational vector to a primitive integer vector."""
    vec = [as_fraction(x) for x in vec]
    den = reduce(lcm, (x.denominator for x in vec), 1)
    ints = [int(x * den) for x in vec]
    g = reduce(gcd, (abs(x) for x in ints), 0)
    if g == 0:
        return tuple(ints)
    return tuple(x // g for x in ints)


# ---------------------------------------------------------------------------
# cones


class ConeH:
    """H-description of a polyhedral cone: rows ``a . x = 0`` or ``a . x >= 0``.

    Rows are normalised to primitive integer vectors; equality rows are
    additionally signed so the first nonzero entry is positive.  Zero rows and
    duplicates are dropped, first occurrence wins.
    """

    __slots__ = ("dim", "rows", "labels")

    def __init__(self, dim: int, rows: Iterable[tuple], labels: Iterable[str] | None = None):
        self.dim = dim
        seen = set()
        out = []
        labs = []
        rows = list(rows)
        labels = list(labels) if labels is not None else [""] * len(rows)
        for (vec, rel), lab in zip(rows, labels):
            if rel not in (EQ, GEQ):
                raise ValueError(f"bad relation {rel!r}")
            if len(vec) != dim:
                raise ValueError("row length does not match ambient dimension")
            p = primitive_integer(vec)
            if not any(p):
                continue
            if rel == EQ:
                lead = next(x for x in p if x)
                if lead < 0:
                    p = tuple(-x for x in p)
            key = (p, rel)
            if key in seen:
                continue
            seen.add(key)
            out.append((tuple(Fraction(x) for x in p), rel))
            labs.append(lab)
        self.rows = tuple(out)
        self.labels = tuple(labs)

    @property
    def equalities(self) -> list[tuple[Fraction, ...]]:
        return [a for a, rel in self.rows if rel == EQ]

    @property
    def inequalities(self) -> list[tuple[Fraction, ...]]:
        return [a for a, rel in self.rows if rel == GEQ]

    def values(self, point) -> list[Fraction]:
        return [dot(a, point) for a, _ in self.rows]

    def contains(self, point) -> bool:
        return all((v == 0) if rel == EQ else (v >= 0) for v, (_, rel) in zip(self.values(point), self.rows))

    def strictly_contains(self, point) -> bool:
        """Equalities hold exactly and every inequality is strict."""
        return all((v == 0) if rel == EQ else (v > 0) for v, (_, rel) in zip(self.values(point), self.rows))

    def tight_rows(self, point) -> list[int]:
        return [k for k, (v, (_, rel)) in enumerate(zip(self.values(point), self.rows)) if rel == GEQ and v == 0]

    def drop_row(self, k: int) -> "ConeH":
        rows = [r for i, r in enumerate(self.rows) if i != k]
        labs = [r for i, r in enumerate(self.labels) if i != k]
        return ConeH(self.dim, rows, labs)

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "rows": [
                {"functional": [frac_str(x) for x in a], "relation": rel, "label": lab}
                for (a, rel), lab in zip(self.rows, self.labels)
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "ConeH":
        rows = [([as_fraction(x) for x in r["functional"]], r["relation"]) for r in data["rows"]]
        return cls(int(data["dim"]), rows, [r.get("label", "") for r in data["rows"]])

    def __len__(self):
        return len(self.rows)

    def __repr__(self):
        return f"ConeH(dim={self.dim}, {len(self.equalities)} eq, {len(self.inequalities)} ineq)"


def _normalize_affine(a, b):
    """Positive rescaling of the affine row ``a . x (rel) b`` to integers."""
    vec = list(a) + [b]
    p = primitive_integer(vec)
    return tuple(Fraction(x) for x in p[:-1]), Fraction(p[-1])


class Infeasible(Exception):
    pass


def _fm_step(eqs, ineqs, j):
    """Eliminate variable ``j`` from affine rows ``a.x = b`` / ``a.x >= b``.

    Returns the new systems plus a record used for back substitution.
    """
    pivot = next((k for k, (a, b) in enumerate(eqs) if a[j]), None)
    if pivot is not None:
        pa, pb = eqs[pivot]

        def sub(a, b):
            if not a[j]:
                return a, b
            f = a[j] / pa[j]
            return tuple(x - f * y for x, y in zip(a, pa)), b - f * pb

        new_eqs = [sub(a, b) for k, (a, b) in enumerate(eqs) if k != pivot]
        new_ineqs = [sub(a, b) for a, b in ineqs]
        return new_eqs, new_ineqs, ("eq", pa, pb)
    pos = [(a, b) for a, b in ineqs if a[j] > 0]
    neg = [(a, b) for a, b in ineqs if a[j] < 0]
    rest = [(a, b) for a, b in ineqs if a[j] == 0]
    for ap, bp in pos:
        for an, bn in neg:
            cp, cn = -an[j], ap[j]
            rest.append((tuple(cp * x + cn * y for x, y in zip(ap, an)), cp * bp + cn * bn))
    return list(eqs), rest, ("ineq", pos, neg)


def _clean(eqs, ineqs):
    out_e, out_i = [], []
    seen = set()
    for a, b in eqs:
        if not any(a):
            if b != 0:
                raise Infeasible
            continue
        a, b = _normalize_affine(a, b)
        lead = next(x for x in a if x)
        if lead < 0:
            a, b = tuple(-x for x in a), -b
        if ("e", a, b) not in seen:
            seen.add(("e", a, b))
            out_e.append((a, b))
    for a, b in ineqs:
        if not any(a):
            if b > 0:
                raise Infeasible
            continue
        a, b = _normalize_affine(a, b)
        if ("i", a, b) not in seen:
            seen.add(("i", a, b))
            out_i.append((a, b))
    return out_e, out_i


def fm_eliminate(cone: ConeH, index: int) -> ConeH:
    """Fourier-Motzkin projection of ``cone`` forgetting coordinate ``index``."""
    if not 0 <= index < cone.dim:
        raise IndexError("coordinate index out of range")
    eqs = [(a, Fraction(0)) for a, rel in cone.rows if rel == EQ]
    ineqs = [(a, Fraction(0)) for a, rel in cone.rows if rel == GEQ]
    eqs, ineqs, _ = _fm_step(eqs, ineqs, index)
    eqs, ineqs = _clean(eqs, ineqs)
    drop = lambda a: [x for k, x in enumerate(a) if k != index]
    rows = [(drop(a), EQ) for a, _ in eqs] + [(drop(a), GEQ) for a, _ in ineqs]
    return ConeH(cone.dim - 1, rows)


def affine_feasible_point(dim: int, eqs, ineqs) -> list[Fraction] | None:
    """Exact point with ``a.x = b`` and ``a.x >= b`` for all rows, or None.

    Fourier-Motzkin elimination of every coordinate followed by back
    substitution; each free coordinate takes the midpoint of its bounds.
    """
    eqs = [(tuple(as_fraction(x) for x in a), as_fraction(b)) for a, b in eqs]
    ineqs = [(tuple(as_fraction(x) for x in a), as_fraction(b)) for a, b in ineqs]
    records = []
    try:
        eqs, ineqs = _clean(eqs, ineqs)
        for j in range(dim):
            eqs, ineqs, rec = _fm_step(eqs, ineqs, j)
            records.append(rec)
            eqs, ineqs = _clean(eqs, ineqs)
    except Infeasible:
        return None
    x = [Fraction(0)] * dim
    for j in reversed(range(dim)):
        rec = records[j]
        if rec[0] == "eq":
            _, a, b = rec
            x[j] = (b - sum((a[k] * x[k] for k in range(dim) if k != j), Fraction(0))) / a[j]
            continue
        _, pos, neg = rec
        rest = lambda a: sum((a[k] * x[k] for k in range(dim) if k != j), Fraction(0))
        lo = max(((b - rest(a)) / a[j] for a, b in pos), default=None)
        hi = min(((b - rest(a)) / a[j] for a, b in neg), default=None)
        if lo is not None and hi is not None:
            if lo > hi:  # pragma: no cover - FM guarantees consistency
                return None
            x[j] = (lo + hi) / 2
        elif lo is not None:
            x[j] = lo
        elif hi is not None:
            x[j] = hi
    return x


def strict_point(cone: ConeH) -> list[Fraction] | None:
    """Point satisfying every equality and every inequality strictly.

    First tries the square-ish linear system ``a.x = 0`` (equalities),
    ``a.x = 1`` (inequalities), which succeeds for simplicial cones; otherwise
    falls back to Fourier-Motzkin on ``a.x >= 1``.  Cones are homogeneous, so
    a strict point exists iff this affine system is feasible.
    """
    eqs = cone.equalities
    ineqs = cone.inequalities
    rows = [list(a) for a in eqs] + [list(a) for a in ineqs]
    if rows:
        x = solve(rows, [0] * len(eqs) + [1] * len(ineqs))
        if x is not None and cone.strictly_contains(x):
            return x
    else:
        return [Fraction(0)] * cone.dim
    x = affine_feasible_point(cone.dim, [(a, 0) for a in eqs], [(a, 1) for a in ineqs])
    if x is None or not cone.strictly_contains(x):
        return None
    return x


def nonnegative_combination(target, rows) -> list[Fraction] | None:
    """Coefficients ``c >= 0`` with ``sum c_k rows[k] = target``, or None.

    Exact feasibility via :func:`affine_feasible_point` on the coefficient
    vector.
    """
    rows = _to_matrix(rows)
    target = [as_fraction(x) for x in target]
    m = len(rows)
    if m == 0:
        return [] if not any(target) else None
    eqs = [([rows[k][c] for k in range(m)], target[c]) for c in range(len(target))]
    ineqs = [([Fraction(int(i == k)) for i in range(m)], 0) for k in range(m)]
    # independent rows: the combination is unique, a plain solve suffices
    if rank(rows) == m:
        c = solve([e[0] for e in eqs], [e[1] for e in eqs])
        if c is None or any(x < 0 for x in c):
            return None
        return c
    return affine_feasible_point(m, eqs, ineqs)


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)
