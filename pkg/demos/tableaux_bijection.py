"""PBW-semistandard tableaux of a given shape and their FFLV lattice points.

    python demos/tableaux_bijection.py 2 1,1
"""

import sys

from spfflv.fflv import lattice_points, to_sparse, weyl_dim
from spfflv.lie import letter_str
from spfflv.tableaux import enumerate_tableaux, rho_lambda

n = int(sys.argv[1]) if len(sys.argv) > 1 else 2
lam = tuple(int(x) for x in (sys.argv[2] if len(sys.argv) > 2 else "1,1").split(","))

T = enumerate_tableaux(lam, n)
for t in T:
    cols = " | ".join(" ".join(letter_str(c, n) for c in col) for col in t)
    s = to_sparse(rho_lambda(t, n), n)
    print(f"  {cols:24s} -> " + (" + ".join(f"{c}*{r.label()}" for r, c in s.items()) or "0"))

image = {rho_lambda(t, n) for t in T}
print(f"{len(T)} tableaux, {len(lattice_points(lam))} lattice points, dim V = {weyl_dim(lam)}")
print("bijective:", image == set(lattice_points(lam)) and len(image) == len(T))
