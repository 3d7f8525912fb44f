"""The degree cone K_2n, derived inequalities, the weight map into R^P and
the tropical cone C_2n.

Coordinates of a degree point are indexed by ``positive_roots(n)``; the value
at alpha_{i,n-bar} is the value at alpha_{i,n}.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

from .fflv import Exp
from .kernel import (
    EQ,
    GEQ,
    ConeH,
    as_fraction,
    dot,
    frac_str,
    initial_form,
    kernel_basis,
    nonnegative_combination,
    rank,
    solve,
    strict_point,
)
from .lie import (
    Root,
    bar,
    bracket,
    positive_roots,
    root_from_key,
    root_from_letters,
    root_with_coords,
    simple_coords,
)
from .minimizers import s_IJ
from .pluecker import PIndex, X, index_from_key, index_key, pluecker_indices

MIN = "min"
PAPER = "paper"


class DegreePoint:
    """Rational point of R^{Phi+}, immutable."""

    __slots__ = ("n", "values")

    def __init__(self, n: int, values: Sequence):
        if len(values) != n * n:
            raise ValueError("need one value per positive root")
        self.n = n
        self.values = tuple(as_fraction(x) for x in values)

    @classmethod
    def from_dict(cls, n: int, d: Mapping[Root, object]) -> "DegreePoint":
        roots = positive_roots(n)
        missing = [r for r in roots if r not in d]
        if missing:
            raise ValueError(f"missing coordinates {missing}")
        return cls(n, [d[r] for r in roots])

    @classmethod
    def from_json(cls, n: int, data: Mapping[str, object]) -> "DegreePoint":
        return cls.from_dict(n, {root_from_key(k, n): as_fraction(v) for k, v in data.items()})

    def to_json(self) -> dict:
        return {r.key(): frac_str(v) for r, v in zip(positive_roots(self.n), self.values)}

    def __getitem__(self, r: Root) -> Fraction:
        return self.values[positive_roots(self.n).index(r)]

    def at(self, i: int, q: int) -> Fraction:
        """d_{i,q} for a first index i and a letter code q."""
        r = root_from_letters(i, q, self.n)
        if r is None:
            raise KeyError((i, q))
        return self[r]

    def __iter__(self):
        return iter(self.values)

    def __eq__(self, other):
        return isinstance(other, DegreePoint) and self.n == other.n and self.values == other.values

    def __hash__(self):
        return hash((self.n, self.values))

    def __repr__(self):
        return "DegreePoint(" + ", ".join(f"{r.label()}={v}" for r, v in zip(positive_roots(self.n), self.values)) + ")"


def example_point() -> DegreePoint:
    """The rank 2 interior point d11 = 3, d22 = 1, d12 = 2, d11' = 1."""
    n = 2
    return DegreePoint.from_dict(n, {Root(1, 1): 3, Root(2, 2): 1, Root(1, 2): 2, Root(1, 1, True): 1})


# ---------------------------------------------------------------------------
# linear forms on R^{Phi+}


class _Form:
    """Helper building a linear functional from (coefficient, i, letter) terms."""

    def __init__(self, n):
        self.n = n
        self.idx = {r: k for k, r in enumerate(positive_roots(n))}
        self.vec = [Fraction(0)] * (n * n)
        self.ok = True

    def add(self, c, i, q):
        r = root_from_letters(i, q, self.n)
        if r is None:
            self.ok = False
            return self
        self.vec[self.idx[r]] += c
        return self


def _form(n, terms):
    f = _Form(n)
    for c, i, q in terms:
        f.add(c, i, q)
    return f.vec if f.ok else None


def k_cone_h(n: int) -> ConeH:
    """Facets A_i, B_{i,j}, C_{i,j}, D_i of the degree cone (all >= 0)."""
    b = lambda x: bar(x, n)
    rows, labels = [], []

    def push(label, terms):
        v = _form(n, terms)
        assert v is not None, label
        rows.append((v, GEQ))
        labels.append(label)

    for i in range(1, n):
        push(f"A_{i}", [(1, i, i), (1, i + 1, i + 1), (-1, i, i + 1)])
    for i in range(1, n):
        for j in range(i + 1, n):
            push(f"B_{i},{j}", [(1, i, j), (1, i + 1, j + 1), (-1, i, j + 1), (-1, i + 1, j)])
    for i in range(1, n):
        for j in range(i + 1, n):
            push(f"C_{i},{j}", [(1, i, b(j + 1)), (1, i + 1, b(j)), (-1, i, b(j)), (-1, i + 1, b(j + 1))])
    for i in range(1, n):
        push(f"D_{i}", [(2, i, b(i + 1)), (-1, i, b(i)), (-1, i + 1, b(i + 1))])
    cone = ConeH(n * n, rows, labels)
    assert len(cone.rows) == n * (n - 1)
    return cone


@dataclass(frozen=True)
class Membership:
    status: str  # "outside" | "boundary" | "interior"
    tight: tuple[str, ...] = ()
    violated: tuple[str, ...] = ()


def membership(d: DegreePoint, n: int | None = None) -> Membership:
    n = d.n if n is None else n
    cone = k_cone_h(n)
    vals = cone.values(d.values)
    viol = tuple(lab for lab, v in zip(cone.labels, vals) if v < 0)
    if viol:
        return Membership("outside", violated=viol)
    tight = tuple(lab for lab, v in zip(cone.labels, vals) if v == 0)
    return Membership("boundary" if tight else "interior", tight=tight)


def interior_point(n: int) -> DegreePoint:
    p = strict_point(k_cone_h(n))
    if p is None:  # pragma: no cover - the cone is full dimensional
        raise ArithmeticError("degree cone has empty interior")
    return DegreePoint(n, p)


def lineality_basis(n: int) -> list[DegreePoint]:
    """k-th vector: d(beta) = multiplicity of alpha_k in beta."""
    roots = positive_roots(n)
    return [DegreePoint(n, [simple_coords(r, n)[k] for r in roots]) for k in range(n)]


def irredundancy_witness(n: int, k: int) -> list[Fraction]:
    """Point violating facet k while satisfying all other facets strictly."""
    cone = k_cone_h(n)
    rhs = [Fraction(-1) if r == k else Fraction(1) for r in range(len(cone.rows))]
    x = solve([list(a) for a, _ in cone.rows], rhs)
    if x is None:  # pragma: no cover
        raise ArithmeticError("facet rows are dependent")
    return x


def cone_geometry(n: int) -> dict:
    """Exact certificates for dimension, facets, lineality and simpliciality."""
    cone = k_cone_h(n)
    A = [list(a) for a, _ in cone.rows]
    p = strict_point(cone)
    lin = kernel_basis(A, ncols=n * n)
    basis = [list(v.values) for v in lineality_basis(n)]
    same_lineality = rank(basis) == n and rank(basis + lin) == n and len(lin) == n
    witnesses = []
    for k in range(len(cone.rows)):
        w = irredundancy_witness(n, k)
        vals = cone.values(w)
        witnesses.append(all((v < 0) if r == k else (v > 0) for r, v in enumerate(vals)))
    return {
        "n": n,
        "interior_point": p,
        "full_dimensional": p is not None and cone.strictly_contains(p),
        "facets": len(cone.rows),
        "facets_irredundant": all(witnesses),
        "row_rank": rank(A),
        "lineality_dim": len(lin),
        "lineality_matches": same_lineality,
        "simplicial": rank(A) == len(cone.rows) == n * n - n,
    }


# ---------------------------------------------------------------------------
# derived inequalities


def derived_rows(n: int) -> list[tuple[str, list[Fraction]]]:
    """Families A..H, instantiated over their index ranges, one (label, row)
    per instance.  Different instances may give the same row.

    Instances naming a symbol that is not a positive root (for example
    d_{j+1,j} in E when i = k = j + 1) are skipped.
    """
    b = lambda x: bar(x, n)
    rows = []
    R = range(1, n + 1)

    def push(label, terms):
        v = _form(n, terms)
        if v is not None and any(v):
            rows.append((label, v))

    for i in R:
        for j in R:
            for k in R:
                if i <= j < k:
                    push(f"A_{i},{j},{k}", [(1, i, j), (1, j + 1, k), (-1, i, k)])
                if i <= k <= j + 1 <= n and i != j + 1:
                    push(f"E_{i},{j},{k}", [(1, i, j), (1, k, b(j + 1)), (-1, i, b(k))])
                if i <= j < k:
                    push(f"F_{i},{j},{k}", [(1, i, j), (1, j + 1, b(k)), (-1, i, b(k))])
    for i in R:
        for j in R:
            if i < j:
                push(f"D_{i},{j}", [(2, i, b(j)), (-1, i, b(i)), (-1, j, b(j))])
            for k in R:
                for l in R:
                    if i < k <= j < l:
                        push(f"B_{i},{j},{k},{l}", [(1, i, j), (1, k, l), (-1, i, l), (-1, k, j)])
                        push(f"C_{i},{j},{k},{l}", [(1, i, b(l)), (1, k, b(j)), (-1, i, b(j)), (-1, k, b(l))])
                        push(f"G_{i},{j},{k},{l}", [(1, i, b(j)), (1, k, b(l)), (-1, i, b(k)), (-1, j, b(l))])
                        push(f"H_{i},{j},{k},{l}", [(1, i, b(l)), (1, k, b(j)), (-1, i, b(k)), (-1, j, b(l))])
    return rows


def derived_inequalities(n: int) -> ConeH:
    """The derived rows as a cone, duplicates removed."""
    rows = derived_rows(n)
    return ConeH(n * n, [(v, GEQ) for _, v in rows], [lab for lab, _ in rows])


def facet_certificate(row: Sequence, n: int) -> list[Fraction] | None:
    """Nonnegative coefficients expressing ``row`` in the facet rows."""
    facets = [list(a) for a, _ in k_cone_h(n).rows]
    return nonnegative_combination(row, facets)


def random_cone_point(n: int, rng: random.Random, interior: bool = True, scale: int = 5) -> DegreePoint:
    """Seeded point of K_2n: positive (or nonnegative) facet values plus a
    random lineality component."""
    cone = k_cone_h(n)
    A = [list(a) for a, _ in cone.rows]
    if interior:
        y = [Fraction(rng.randint(1, scale), rng.randint(1, 3)) for _ in A]
    else:
        y = [Fraction(rng.randint(1, scale)) for _ in A]
        for k in rng.sample(range(len(A)), rng.randint(1, len(A)) if A else 0):
            y[k] = Fraction(0)
    x = solve(A, y) if A else [Fraction(0)] * (n * n)
    for v in lineality_basis(n):
        c = Fraction(rng.randint(-scale, scale))
        x = [a + c * b for a, b in zip(x, v.values)]
    return DegreePoint(n, x)


def degree_of(s: Exp, d: DegreePoint) -> Fraction:
    return dot(s, d.values)


def degenerate_bracket_vanishes(d: DegreePoint, r1: Root, r2: Root) -> bool:
    """Whether [f_r1, f_r2] vanishes in the degeneration at d.

    The governing inequality is d(r1) + d(r2) >= d(r1 + r2); the bracket
    survives exactly when it is tight.
    """
    n = d.n
    coords = [a + b for a, b in zip(simple_coords(r1, n), simple_coords(r2, n))]
    gamma = root_with_coords(coords, n)
    if gamma is None:
        raise ValueError(f"{r1.label()} + {r2.label()} is not a positive root")
    return d[r1] + d[r2] > d[gamma]


def bracket_pairs(n: int) -> list[tuple[Root, Root]]:
    """Ordered pairs with nonzero bracket (equivalently with r1 + r2 a root)."""
    roots = positive_roots(n)
    return [(a, b) for a in roots for b in roots if bracket(a, b, n) is not None]


# ---------------------------------------------------------------------------
# weight map and C_2n


def sign_factor(sign: str) -> int:
    if sign == MIN:
        return 1
    if sign == PAPER:
        return -1
    raise ValueError(f"unknown sign convention {sign!r}")


@lru_cache(maxsize=None)
def weight_matrix(n: int) -> tuple[tuple[int, ...], ...]:
    """Row J holds s_{[k],J} (k = |J|); the MinConvention map is d -> W d."""
    return tuple(s_IJ(tuple(range(1, len(J) + 1)), J, n) for J in pluecker_indices(n))


def tropical_point(d: DegreePoint, sign: str = MIN) -> dict[PIndex, Fraction]:
    n = d.n
    c = sign_factor(sign)
    return {J: c * dot(row, d.values) for J, row in zip(pluecker_indices(n), weight_matrix(n))}


def tropical_to_json(v: Mapping[PIndex, Fraction], n: int) -> dict:
    return {index_key(J, n): frac_str(x) for J, x in v.items()}


def tropical_from_json(data: Mapping[str, object], n: int) -> dict[PIndex, Fraction]:
    return {index_from_key(k, n): as_fraction(x) for k, x in data.items()}


def tropical_vector(v: Mapping[PIndex, Fraction], n: int) -> list[Fraction]:
    return [as_fraction(v[J]) for J in pluecker_indices(n)]


def _s(n, *letters):
    """Coordinate functional s_J on R^P.

    Letters are codes, so ``n + 1`` is already n-bar: the successor of n in
    the barred alphabet.
    """
    J = tuple(letters)
    assert list(J) == sorted(set(J)), J
    vec = [0] * len(pluecker_indices(n))
    vec[pluecker_indices(n).index(J)] = 1
    return vec


def _comb(n, terms):
    out = [0] * len(pluecker_indices(n))
    for c, v in terms:
        out = [a + c * b for a, b in zip(out, v)]
    return out


def c_inequalities(n: int, sign: str = MIN) -> list[tuple[str, list[int]]]:
    """Families (v)-(viii): one functional per instance, >= 0 on C_2n.

    The families are written for the MinConvention; the negated-weight
    rows are their negatives.  Family (vi) is indexed by i + 2 <= j <= n
    (it corresponds to B_{i,j-1}); letters beyond n are barred successors.
    """
    c = sign_factor(sign)
    b = lambda x: bar(x, n)
    pre = lambda i: tuple(range(1, i))  # 1, ..., i-1
    out = []
    for i in range(1, n):
        out.append((f"(v)_{i}", _comb(n, [(1, _s(n, *pre(i), i + 1)), (1, _s(n, *pre(i), i, i + 2)), (-1, _s(n, *pre(i), i + 2))])))
    for i in range(1, n):
        for j in range(i + 2, n + 1):
            out.append(
                (
                    f"(vi)_{i},{j}",
                    _comb(
                        n,
                        [
                            (1, _s(n, *pre(i), j)),
                            (1, _s(n, *pre(i), i, j + 1)),
                            (-1, _s(n, *pre(i), j + 1)),
                            (-1, _s(n, *pre(i), i, j)),
                        ],
                    ),
                )
            )
    for i in range(1, n):
        for j in range(i + 1, n):
            out.append(
                (
                    f"(vii)_{i},{j}",
                    _comb(
                        n,
                        [
                            (1, _s(n, *pre(i), b(j + 1))),
                            (1, _s(n, *pre(i), i, b(j))),
                            (-1, _s(n, *pre(i), b(j))),
                            (-1, _s(n, *pre(i), i, b(j + 1))),
                        ],
                    ),
                )
            )
    for i in range(1, n):
        out.append(
            (
                f"(viii)_{i}",
                _comb(n, [(2, _s(n, *pre(i), b(i + 1))), (-1, _s(n, *pre(i), b(i))), (-1, _s(n, *pre(i), i, b(i + 1)))]),
            )
        )
    return [(lab, [c * x for x in v]) for lab, v in out]


def c_equalities(n: int) -> list[list[Fraction]]:
    """Basis of the linear forms vanishing on the image of the weight map."""
    W = [list(r) for r in weight_matrix(n)]
    Wt = [list(col) for col in zip(*W)]
    return kernel_basis(Wt, ncols=len(W))


def c_cone_h(n: int, sign: str = MIN) -> ConeH:
    eqs = c_equalities(n)
    ineqs = c_inequalities(n, sign)
    dim = len(pluecker_indices(n))
    rows = [(e, EQ) for e in eqs] + [(v, GEQ) for _, v in ineqs]
    labels = [f"eq{k}" for k in range(len(eqs))] + [lab for lab, _ in ineqs]
    return ConeH(dim, rows, labels)


def facet_correspondence(n: int) -> dict[str, str]:
    """Which facet of K_2n each C_2n inequality pulls back to (MinConvention)."""
    W = [list(r) for r in weight_matrix(n)]
    facets = k_cone_h(n)
    out = {}
    for lab, v in c_inequalities(n, MIN):
        pulled = [sum(v[J] * W[J][k] for J in range(len(W))) for k in range(n * n)]
        match = [fl for (a, _), fl in zip(facets.rows, facets.labels) if list(a) == [Fraction(x) for x in pulled]]
        out[lab] = match[0] if match else ""
    return out


def example_c4() -> ConeH:
    """The rank 2 cone as usually displayed, in the MinConvention."""
    n = 2
    s = lambda *t: _s(n, *t)
    one, two, twob, oneb = 1, 2, 3, 4
    eq = [
        s(one),
        s(one, two),
        _comb(n, [(1, s(twob)), (-1, s(one, oneb))]),
        _comb(n, [(1, s(one, oneb)), (-1, s(two, twob))]),
        _comb(n, [(1, s(oneb)), (-1, s(two, oneb))]),
        _comb(n, [(1, s(twob, oneb)), (-1, s(oneb)), (-1, s(one, twob))]),
    ]
    ineq = [
        _comb(n, [(1, s(two)), (1, s(one, twob)), (-1, s(twob))]),
        _comb(n, [(1, s(two)), (1, s(twob)), (-1, s(oneb))]),
        _comb(n, [(2, s(twob)), (-1, s(oneb)), (-1, s(one, twob))]),
    ]
    return ConeH(len(pluecker_indices(n)), [(e, EQ) for e in eq] + [(v, GEQ) for v in ineq])


def same_row_space(a: Sequence[Sequence], b: Sequence[Sequence]) -> bool:
    a, b = [list(x) for x in a], [list(x) for x in b]
    ra, rb = rank(a) if a else 0, rank(b) if b else 0
    return ra == rb and (rank(a + b) if a + b else 0) == ra


def irredundant_inequalities(cone: ConeH) -> list[tuple[Fraction, ...]]:
    """Inequality rows not implied by the equalities and the other rows."""
    eqs = [list(e) for e in cone.equalities]
    ineqs = [list(a) for a in cone.inequalities]
    keep = []
    for k, a in enumerate(ineqs):
        others = [x for t, x in enumerate(ineqs) if t != k]
        # a implied iff a = sum c_t others_t + sum (e_plus - e_minus) eqs, c >= 0
        gens = others + eqs + [[-x for x in e] for e in eqs]
        if nonnegative_combination(a, gens) is None:
            keep.append(tuple(a))
    return keep


def same_cone(c1: ConeH, c2: ConeH) -> bool:
    """Equal cones, compared via equality row spaces and implied inequalities."""
    if not same_row_space(c1.equalities, c2.equalities):
        return False
    for src, dst in ((c1, c2), (c2, c1)):
        gens = [list(a) for a in dst.inequalities] + [list(e) for e in dst.equalities] + [
            [-x for x in e] for e in dst.equalities
        ]
        for a in src.inequalities:
            if nonnegative_combination(list(a), gens) is None:
                return False
    return True


def maximality_certificates(n: int) -> list[dict]:
    """For every C_2n inequality, a point of the image of the weight map that
    violates only that inequality, and the designated three-term Plücker
    relation whose initial form there is a single monomial."""
    b = lambda x: bar(x, n)
    pre = lambda i: list(range(1, i))
    W = [list(r) for r in weight_matrix(n)]
    facets = k_cone_h(n)
    corr = facet_correspondence(n)

    def three_term(A, a, bb, c, dd):
        x = lambda *t: X(list(A) + list(t), n)
        return x(a, bb) * x(c, dd) - x(a, c) * x(bb, dd) + x(a, dd) * x(bb, c)

    def incidence(A, a, bb, c):
        x = lambda *t: X(list(A) + list(t), n)
        return x(a) * x(bb, c) - x(bb) * x(a, c) + x(c) * x(a, bb)

    relations = {}
    for i in range(1, n):
        relations[f"(v)_{i}"] = incidence(pre(i), i, i + 1, i + 2)
        for j in range(i + 2, n + 1):
            relations[f"(vi)_{i},{j}"] = three_term(pre(i), i, i + 1, j, j + 1)
        for j in range(i + 1, n):
            relations[f"(vii)_{i},{j}"] = three_term(pre(i), i, i + 1, b(j + 1), b(j))
        relations[f"(viii)_{i}"] = three_term(pre(i), i, i + 1, b(i + 1), b(i))
    out = []
    for lab, v in c_inequalities(n, MIN):
        target = corr[lab]
        k = facets.labels.index(target)
        y = [Fraction(-1) if r == k else Fraction(1) for r in range(len(facets.rows))]
        d = solve([list(a) for a, _ in facets.rows], y)
        point = [dot(row, d) for row in W]
        rel = relations[lab]
        ini = initial_form(rel, point)
        out.append(
            {
                "family": lab,
                "facet": target,
                "relation": rel,
                "point": point,
                "violates": dot(v, point) < 0,
                "others_hold": all(dot(w, point) > 0 for l2, w in c_inequalities(n, MIN) if l2 != lab),
                "initial_form": ini,
                "monomial": ini.is_monomial(),
            }
        )
    return out
