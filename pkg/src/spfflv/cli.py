"""Command line front end.

    spfflv fflv points --n 2 --lambda 1,1
    spfflv cone facets|check|interior|trop ...
    spfflv ideal generators|initial|hilbert ...
    spfflv chart pj|phi|degenerate ...
    spfflv tab enumerate|rho ...
    spfflv verify --level quick --n 2 --seed 7 --json out.json

Exit status: 0 success, 1 a check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .chart import images_table, p_J, phi
from .cone import (
    MIN,
    PAPER,
    DegreePoint,
    interior_point,
    k_cone_h,
    membership,
    tropical_point,
    tropical_to_json,
)
from .fflv import lattice_points, to_sparse
from .groebner import ResourceLimit, buchberger, hilbert_count
from .kernel import dumps
from .pluecker import generators, index_from_key, pluecker_indices, x_ring
from .tableaux import enumerate_tableaux, is_semistandard, rho_lambda, tableau_from_json, tableau_to_json
from .verify import jsonable

OK, FAILED, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}")


def _weight(text: str, n: int) -> tuple[int, ...]:
    lam = _ints(text)
    if len(lam) != n or any(x < 0 for x in lam):
        raise UsageError(f"--lambda needs {n} nonnegative entries")
    return lam


def _load(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as e:
        raise UsageError(f"cannot read {path}: {e}")


def _point(path: str, n: int) -> DegreePoint:
    return DegreePoint.from_json(n, _load(path))


def _pweight(path: str, n: int) -> list:
    data = _load(path)
    v = {index_from_key(k, n): val for k, val in data.items()}
    missing = [J for J in pluecker_indices(n) if J not in v]
    if missing:
        raise UsageError(f"weight file misses {len(missing)} Plücker coordinates")
    return [v[J] for J in pluecker_indices(n)]


def _emit(obj):
    print(dumps(jsonable(obj)))


# ---------------------------------------------------------------------------
# handlers


def cmd_fflv_points(a):
    lam = _weight(a.lam, a.n)
    pts = sorted(lattice_points(lam))
    if a.json:
        _emit([{r.key(): c for r, c in to_sparse(s, a.n).items()} for s in pts])
    else:
        for s in pts:
            print(" ".join(f"{r.label()}^{c}" for r, c in to_sparse(s, a.n).items()) or "1")
        print(f"# {len(pts)} points")
    return OK


def cmd_cone_facets(a):
    cone = k_cone_h(a.n)
    _emit({"n": a.n, "facets": [{"label": lab, "row": list(row)} for lab, (row, _) in zip(cone.labels, cone.rows)]})
    return OK


def cmd_cone_check(a):
    m = membership(_point(a.point, a.n))
    _emit({"status": m.status, "tight": list(m.tight), "violated": list(m.violated)})
    return OK if m.status != "outside" else FAILED


def cmd_cone_interior(a):
    _emit(interior_point(a.n).to_json())
    return OK


def cmd_cone_trop(a):
    v = tropical_point(_point(a.point, a.n), a.sign)
    _emit(tropical_to_json(v, a.n))
    return OK


def cmd_ideal_generators(a):
    gens = generators(a.n)
    if a.json:
        _emit([g.to_json() for g in gens])
    else:
        for g in gens:
            print(g)
        print(f"# {len(gens)} generators")
    return OK


def _basis(a):
    try:
        return buchberger(generators(a.n), _pweight(a.weight, a.n), max_pairs=a.max_pairs)
    except ResourceLimit as e:
        print(f"resource cap: {e}", file=sys.stderr)
        return None


def cmd_ideal_initial(a):
    gb = _basis(a)
    if gb is None:
        return FAILED
    ini = gb.initial_forms()
    _emit({"initial_forms": [str(f) for f in ini], "monomial_generators": [str(f) for f in ini if f.is_monomial()]})
    return OK


def cmd_ideal_hilbert(a):
    gb = _basis(a)
    if gb is None:
        return FAILED
    lam = _weight(a.lam, a.n)
    _emit({"lambda": list(lam), "standard_monomials": hilbert_count(gb, lam, a.n)})
    return OK


def cmd_chart_pj(a):
    J = index_from_key(a.J, a.n)
    print(p_J(a.n, J))
    return OK


def cmd_chart_phi(a):
    from .kernel import SparsePoly

    f = SparsePoly.from_json(_load(a.poly), x_ring(a.n))
    img = phi(f, a.n)
    _emit({"image": str(img), "zero": not img})
    return OK


def cmd_chart_degenerate(a):
    d = _point(a.d, a.n)
    _emit({k: str(p) for k, p in images_table(d, a.n).items()})
    return OK


def cmd_tab_enumerate(a):
    lam = _weight(a.lam, a.n)
    T = enumerate_tableaux(lam, a.n)
    _emit({"lambda": list(lam), "count": len(T), "tableaux": [tableau_to_json(t, a.n) for t in T]})
    return OK


def cmd_tab_rho(a):
    T = tableau_from_json(_load(a.tableau), a.n)
    if not is_semistandard(T, a.n):
        print("not a PBW-semistandard tableau", file=sys.stderr)
        return FAILED
    s = rho_lambda(T, a.n)
    _emit({r.key(): c for r, c in to_sparse(s, a.n).items()})
    return OK


def cmd_verify(a):
    from .verify import FAIL, report_json, verify

    reports = verify(a.level, a.n, a.seed, suites=a.suite, jobs=a.jobs)
    out = report_json(reports, a.n, a.seed, a.level, timings=a.timings)
    for r in reports:
        print(f"{r.status:8s} {r.suite:22s} {r.anchor}")
    if a.json:
        with open(a.json, "w") as fh:
            fh.write(dumps(out) + "\n")
    return FAILED if any(r.status == FAIL for r in reports) else OK


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="spfflv", description="Symplectic FFLV degenerations, exact arithmetic.")
    sub = p.add_subparsers(dest="group", required=True)

    def group(name, help):
        g = sub.add_parser(name, help=help)
        return g.add_subparsers(dest="cmd", required=True)

    def leaf(parent, name, fn, help):
        q = parent.add_parser(name, help=help)
        q.add_argument("--n", type=int, required=True)
        q.set_defaults(fn=fn)
        return q

    g = group("fflv", "FFLV polytopes")
    q = leaf(g, "points", cmd_fflv_points, "lattice points of FFLV(lambda)")
    q.add_argument("--lambda", dest="lam", required=True)
    q.add_argument("--json", action="store_true")

    g = group("cone", "the degree cone K_2n")
    leaf(g, "facets", cmd_cone_facets, "facet rows")
    leaf(g, "check", cmd_cone_check, "membership of a point").add_argument("--point", required=True)
    leaf(g, "interior", cmd_cone_interior, "a strict interior point")
    q = leaf(g, "trop", cmd_cone_trop, "tropical point w(d)")
    q.add_argument("--point", required=True)
    q.add_argument("--sign", choices=[MIN, PAPER], default=MIN)

    g = group("ideal", "the Plücker ideal")
    q = leaf(g, "generators", cmd_ideal_generators, "defining relations")
    q.add_argument("--json", action="store_true")
    for name, fn, help in (
        ("initial", cmd_ideal_initial, "initial ideal in_v"),
        ("hilbert", cmd_ideal_hilbert, "standard monomials of one multidegree"),
    ):
        q = leaf(g, name, fn, help)
        q.add_argument("--weight", required=True)
        q.add_argument("--max-pairs", type=int, default=200000)
        if name == "hilbert":
            q.add_argument("--lambda", dest="lam", required=True)

    g = group("chart", "the birational chart")
    leaf(g, "pj", cmd_chart_pj, "the polynomial p_J").add_argument("--J", required=True)
    leaf(g, "phi", cmd_chart_phi, "image of a polynomial under phi").add_argument("--poly", required=True)
    leaf(g, "degenerate", cmd_chart_degenerate, "in_d(p_J) for all J").add_argument("--d", required=True)

    g = group("tab", "PBW-semistandard tableaux")
    leaf(g, "enumerate", cmd_tab_enumerate, "all tableaux of shape lambda").add_argument(
        "--lambda", dest="lam", required=True
    )
    leaf(g, "rho", cmd_tab_rho, "lattice point of a tableau").add_argument("--tableau", required=True)

    q = sub.add_parser("verify", help="run the verification suites")
    q.add_argument("--n", type=int, default=2)
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("--level", choices=["quick", "full"], default="quick")
    q.add_argument("--json", metavar="OUT")
    q.add_argument("--suite", action="append", help="restrict to a suite (repeatable)")
    q.add_argument("--jobs", type=int, default=1)
    q.add_argument("--timings", action="store_true", help="include timings in the JSON (breaks byte equality)")
    q.set_defaults(fn=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "n", 1) < 1:
        parser.error("--n must be positive")
    try:
        return args.fn(args)
    except (UsageError, ValueError, KeyError) as e:
        print(f"spfflv: error: {e}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
