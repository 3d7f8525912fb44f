"""Buchberger's algorithm for a weight order refined by graded lex.

The order compares monomials u by (-v.u, total degree, u): the leading term
has minimal v-weight, so the leading form of a polynomial is exactly its
min-convention initial form's top term.  For multihomogeneous input every
reduction stays inside a finite multigraded piece, so the algorithm
terminates even though the order need not be a well-order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .kernel import Ring, SparsePoly, as_fraction, initial_form, weight_of

Exponent = tuple[int, ...]


class ResourceLimit(RuntimeError):
    pass


class WeightOrder:
    def __init__(self, weight: Sequence):
        self.weight = [as_fraction(x) for x in weight]

    def key(self, e: Exponent):
        return (-weight_of(e, self.weight), sum(e), e)

    def lead(self, terms: dict) -> Exponent:
        return max(terms, key=self.key)


def _divides(a: Exponent, b: Exponent) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: Exponent, b: Exponent) -> Exponent:
    return tuple(max(x, y) for x, y in zip(a, b))


def _coprime(a: Exponent, b: Exponent) -> bool:
    return all(not (x and y) for x, y in zip(a, b))


def _shift(terms: dict, mono: Exponent, coeff: Fraction) -> dict:
    return {tuple(x + y for x, y in zip(e, mono)): c * coeff for e, c in terms.items()}


def _sub_into(target: dict, terms: dict):
    for e, c in terms.items():
        v = target.get(e, 0) - c
        if v:
            target[e] = v
        else:
            target.pop(e, None)


def _monic(terms: dict, order: WeightOrder) -> dict:
    lc = terms[order.lead(terms)]
    return {e: c / lc for e, c in terms.items()}


@dataclass
class GroebnerBasis:
    ring: Ring
    weight: list
    polys: list = field(default_factory=list)
    stats: dict = field(default_factory=dict)

    @property
    def order(self) -> WeightOrder:
        return WeightOrder(self.weight)

    def leading_monomials(self) -> list[Exponent]:
        o = self.order
        return [o.lead(g.terms) for g in self.polys]

    def initial_forms(self) -> list[SparsePoly]:
        """in_v of every basis element; these generate in_v(I)."""
        return [initial_form(g, self.weight) for g in self.polys]

    def normal_form(self, f: SparsePoly) -> SparsePoly:
        return SparsePoly(self.ring, reduce_full(dict(f.terms), [dict(g.terms) for g in self.polys], self.order))

    def contains(self, f: SparsePoly) -> bool:
        return not self.normal_form(f)

    def is_standard(self, e: Exponent) -> bool:
        return not any(_divides(m, e) for m in self.leading_monomials())


def reduce_full(f: dict, G: list[dict], order: WeightOrder, max_steps: int = 10**6) -> dict:
    """Complete reduction of f modulo G (all terms)."""
    leads = [(order.lead(g), g) for g in G]
    rem: dict = {}
    f = dict(f)
    steps = 0
    while f:
        lt = order.lead(f)
        c = f[lt]
        for m, g in leads:
            if _divides(m, lt):
                q = tuple(a - b for a, b in zip(lt, m))
                _sub_into(f, _shift(g, q, c / g[m]))
                break
        else:
            rem[lt] = c
            del f[lt]
        steps += 1
        if steps > max_steps:
            raise ResourceLimit("reduction step cap exceeded")
    return rem


def _spoly(f: dict, g: dict, order: WeightOrder) -> dict:
    a, b = order.lead(f), order.lead(g)
    m = _lcm(a, b)
    s = _shift(f, tuple(x - y for x, y in zip(m, a)), 1 / f[a])
    _sub_into(s, _shift(g, tuple(x - y for x, y in zip(m, b)), 1 / g[b]))
    return s


def buchberger(
    gens: Sequence[SparsePoly],
    weight: Sequence,
    max_pairs: int = 200000,
    max_basis: int = 2000,
) -> GroebnerBasis:
    """Reduced Gröbner basis of the ideal generated by ``gens``.

    Pair selection follows the normal strategy (smallest lcm first, ties in
    creation order); pairs with coprime leading monomials are skipped.
    Exceeding ``max_pairs`` or ``max_basis`` raises ResourceLimit.
    """
    gens = [g for g in gens if g]
    if not gens:
        raise ValueError("no nonzero generators")
    ring = gens[0].ring
    if len(weight) != ring.nvars:
        raise ValueError("weight length does not match ring")
    order = WeightOrder(weight)
    G: list[dict] = []
    for g in gens:
        r = reduce_full(dict(g.terms), G, order)
        if r:
            G.append(_monic(r, order))
    pairs = []
    counter = 0
    for j in range(len(G)):
        for i in range(j):
            pairs.append((counter, i, j))
            counter += 1
    processed = 0
    while pairs:
        leads = [order.lead(g) for g in G]
        best = min(range(len(pairs)), key=lambda t: (order.key(_lcm(leads[pairs[t][1]], leads[pairs[t][2]])), pairs[t][0]))
        _, i, j = pairs.pop(best)
        processed += 1
        if processed > max_pairs:
            raise ResourceLimit("S-pair cap exceeded")
        if _coprime(leads[i], leads[j]):
            continue
        r = reduce_full(_spoly(G[i], G[j], order), G, order)
        if r:
            G.append(_monic(r, order))
            if len(G) > max_basis:
                raise ResourceLimit("basis size cap exceeded")
            new = len(G) - 1
            for i2 in range(new):
                pairs.append((counter, i2, new))
                counter += 1
    # minimalize and interreduce
    leads = [order.lead(g) for g in G]
    keep = []
    for k, m in enumerate(leads):
        if any(_divides(leads[t], m) and (leads[t] != m or t < k) for t in range(len(G)) if t != k):
            continue
        keep.append(G[k])
    reduced = []
    for k, g in enumerate(keep):
        others = keep[:k] + keep[k + 1 :]
        lt = order.lead(g)
        tail = {e: c for e, c in g.items() if e != lt}
        r = reduce_full(tail, others, order)
        r[lt] = g[lt]
        reduced.append(_monic(r, order))
    reduced.sort(key=lambda g: order.key(order.lead(g)))
    polys = [SparsePoly(ring, g) for g in reduced]
    return GroebnerBasis(ring, [as_fraction(x) for x in weight], polys, {"pairs": processed, "size": len(polys)})


def hilbert_count(gb: GroebnerBasis, lam: Sequence[int], n: int) -> int:
    """Number of standard monomials of multidegree lam."""
    from .pluecker import monomials_of_degree

    return sum(1 for e in monomials_of_degree(lam, n) if gb.is_standard(e))


def monomial_map_rank(images: Sequence[SparsePoly], lam: Sequence[int], n: int) -> int:
    """dim of the span of the images of degree-lam monomials under a map
    sending every variable to a single nonzero term."""
    from .pluecker import monomials_of_degree

    if not all(p.is_monomial() for p in images):
        raise ValueError("images must be single terms")
    img_exp = [next(iter(p.terms)) for p in images]
    seen = set()
    for e in monomials_of_degree(lam, n):
        acc = None
        for v, a in enumerate(e):
            if a:
                part = tuple(a * x for x in img_exp[v])
                acc = part if acc is None else tuple(x + y for x, y in zip(acc, part))
        seen.add(acc)
    return len(seen)
