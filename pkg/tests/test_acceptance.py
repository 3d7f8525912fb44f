"""Acceptance criteria 1-11, one pass/fail line each.

Run with pytest (lines appear in the terminal summary) or directly as a
script.
"""

import random
import time

import pytest

from spfflv.chart import example_sp4_chart, in_d, p_J, phi, phi_d, phi_d_images
from spfflv.cone import (
    MIN,
    PAPER,
    c_cone_h,
    cone_geometry,
    derived_rows,
    example_c4,
    example_point,
    facet_certificate,
    irredundant_inequalities,
    maximality_certificates,
    membership,
    random_cone_point,
    same_cone,
    same_row_space,
    tropical_point,
    tropical_vector,
)
from spfflv.fflv import fundamental, lattice_points, minkowski_check, weights_up_to_height, weyl_dim
from spfflv.groebner import buchberger, hilbert_count, monomial_map_rank
from spfflv.kernel import dot
from spfflv.pluecker import example_sp4_degenerate, example_sp4_generators, generators, linear_relation, pluecker_indices
from spfflv.tableaux import enumerate_tableaux, rho_lambda
from spfflv.verify import suite_minimizers

SEED = 20240601


def crit1():
    """Cone geometry for n = 2..5."""
    info = {}
    for n in (2, 3, 4, 5):
        g = cone_geometry(n)
        ok = (
            g["full_dimensional"]
            and g["lineality_dim"] == n
            and g["lineality_matches"]
            and g["facets"] == n * (n - 1)
            and g["facets_irredundant"]
            and g["simplicial"]
            and g["row_rank"] == n * n - n
        )
        if not ok:
            return False, f"n={n}: {g}"
        info[n] = g["facets"]
    return True, f"facets {info}"


def crit2():
    """Derived inequalities on 200 seeded samples per n <= 4, with certificates."""
    rng = random.Random(SEED)
    families = set()
    for n in (2, 3, 4):
        rows = derived_rows(n)
        families |= {lab.split("_")[0] for lab, _ in rows}
        for k in range(200):
            d = random_cone_point(n, rng, interior=True)
            if not all(dot(a, d.values) > 0 for _, a in rows):
                return False, f"interior sample violates strictness at n={n}"
            b = random_cone_point(n, rng, interior=False)
            if membership(b).status != "boundary" or not all(dot(a, b.values) >= 0 for _, a in rows):
                return False, f"boundary sample violates a row at n={n}"
        for lab, a in rows:
            c = facet_certificate(a, n)
            if c is None or any(x < 0 for x in c):
                return False, f"no nonnegative certificate for {lab}"
    if families != set("ABCDEFGH"):
        return False, f"families seen: {sorted(families)}"
    return True, "families A-H, 200 interior + 200 boundary samples per n"


def crit3():
    gens = generators(2)
    missing = [g for g in example_sp4_generators() if not any(h == g or h == -g for h in gens)]
    return not missing, f"{len(gens)} generators, missing {missing}"


def crit4():
    full, degen = example_sp4_chart()
    d = example_point()
    bad = [J for J in pluecker_indices(2) if p_J(2, J) != full[J] or in_d(p_J(2, J), d) != degen[J]]
    return not bad, f"mismatches {bad}"


def crit5():
    for n in (2, 3):
        live = [g for g in generators(n) if phi(g, n)]
        if live:
            return False, f"n={n}: {live[0]} survives"
    d = example_point()
    live = [r for r in example_sp4_degenerate() if phi_d(r, d)]
    return not live, f"{len(generators(3))} generators at n=3"


def crit6():
    rows = 0
    for n in (1, 2, 3):
        for lam in weights_up_to_height(n, 3):
            S = lattice_points(lam)
            T = enumerate_tableaux(lam, n)
            w = weyl_dim(lam)
            if not len(S) == len(T) == w or {rho_lambda(t, n) for t in T} != set(S):
                return False, f"n={n} lambda={lam}: |S|={len(S)} |T|={len(T)} weyl={w}"
            rows += 1
    dims = [len(lattice_points(fundamental(k, 3))) for k in (1, 2, 3)]
    return dims == [6, 14, 14], f"{rows} weights, n=3 fundamentals {dims}"


def crit7():
    cases = 0
    for n in (1, 2, 3):
        weights = [tuple([0] * n)] + weights_up_to_height(n, 3)
        for lam in weights:
            for mu in weights:
                if sum(lam) + sum(mu) <= 3:
                    if not minkowski_check(lam, mu):
                        return False, f"n={n} {lam}+{mu}"
                    cases += 1
    return True, f"{cases} pairs"


def crit8():
    out = []
    for n in (2, 3):
        ok, w = suite_minimizers(n, random.Random(f"{SEED}:{n}"), "full")
        if not ok or w["boundary_points"] < 20:
            return False, f"n={n}: {w}"
        out.append(f"n={n}: {w['pairs']} pairs")
    return True, ", ".join(out)


def crit9():
    rng = random.Random(SEED)
    points = [example_point()] + [random_cone_point(2, rng, interior=True) for _ in range(10)]
    lin = linear_relation({1}, {1}, 2).scaled_primitive()
    for d in points:
        v = tropical_vector(tropical_point(d, MIN), 2)
        gb = buchberger(generators(2), v)
        ini = gb.initial_forms()
        if any(f.is_monomial() or len(f) != 2 for f in ini):
            return False, f"non-binomial initial form at {d}"
        if lin not in {f.scaled_primitive() for f in ini}:
            return False, f"linear relation missing at {d}"
        if any(phi_d(f, d) for f in ini):
            return False, f"initial form not in ker phi^d at {d}"
        imgs = phi_d_images(d)
        for lam in weights_up_to_height(2, 3):
            # equal Hilbert function with the monomial-image kernel: in_v(I) is
            # that toric ideal and contains no monomial
            if not hilbert_count(gb, lam, 2) == weyl_dim(lam) == monomial_map_rank(imgs, lam, 2):
                return False, f"Hilbert count at {lam} for {d}"
    example = {f.scaled_primitive() for f in buchberger(generators(2), tropical_vector(tropical_point(points[0]), 2)).initial_forms()}
    listed = {f.scaled_primitive() for f in example_sp4_degenerate()}
    return example == listed, f"{len(points)} points"


def crit10():
    seen = []
    for n in (2, 3):
        for c in maximality_certificates(n):
            if not (c["violates"] and c["others_hold"] and c["monomial"]):
                return False, f"n={n} {c['family']}"
            if phi(c["relation"], n):
                return False, f"n={n} {c['family']}: relation not in the ideal"
            seen.append(c["family"].split("_")[0])
    fams = sorted(set(seen))
    return fams == ["(v)", "(vi)", "(vii)", "(viii)"], f"families {fams}"


def crit11():
    mine, ex = c_cone_h(2, MIN), example_c4()
    eq = same_row_space(mine.equalities, ex.equalities)
    ineq = sorted(irredundant_inequalities(mine)) == sorted(irredundant_inequalities(ex))
    cone = same_cone(mine, ex)
    neg_sign = same_cone(c_cone_h(2, PAPER), ex)
    note = f"min convention matches; negated weight map matches: {neg_sign}"
    return eq and ineq and cone and not neg_sign, note


CRITERIA = [
    (1, "cone geometry n=2..5", crit1, 10),
    (2, "derived inequalities", crit2, None),
    (3, "rank 2 generators", crit3, None),
    (4, "rank 2 chart table", crit4, None),
    (5, "chart kernels", crit5, None),
    (6, "counting", crit6, 60),
    (7, "Minkowski property", crit7, None),
    (8, "minimisation", crit8, None),
    (9, "Groebner degeneration n=2", crit9, 120),
    (10, "maximality certificates", crit10, None),
    (11, "C_4 facet description", crit11, None),
]


def run(number):
    num, name, fn, limit = CRITERIA[number - 1]
    t0 = time.perf_counter()
    ok, detail = fn()
    dt = time.perf_counter() - t0
    if limit is not None and dt >= limit:
        ok, detail = False, f"{detail}; took {dt:.1f} s, limit {limit} s"
    line = f"criterion {num}: {'PASS' if ok else 'FAIL'} [{name}] {dt:.2f} s - {detail}"
    return ok, line


@pytest.mark.parametrize("number", [c[0] for c in CRITERIA])
def test_criterion(number, acceptance_log):
    ok, line = run(number)
    acceptance_log.append(line)
    print(line)
    assert ok, line


if __name__ == "__main__":
    import sys

    results = [run(c[0]) for c in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
