"""The degree cone K_2n and the tropical cone C_2n for small n.

    python demos/cone_tour.py 3
"""

import sys

from spfflv.cone import c_cone_h, cone_geometry, facet_correspondence, interior_point, k_cone_h
from spfflv.lie import positive_roots

n = int(sys.argv[1]) if len(sys.argv) > 1 else 3
roots = [r.label() for r in positive_roots(n)]
cone = k_cone_h(n)
print(f"K_{2 * n}: coordinates {roots}")
for lab, row in zip(cone.labels, cone.inequalities):
    terms = " ".join(f"{int(c):+d}{r}" for c, r in zip(row, roots) if c)
    print(f"  {lab:8s} {terms} >= 0")

g = cone_geometry(n)
print("simplicial:", g["simplicial"], " lineality dim:", g["lineality_dim"])
print("interior point:", interior_point(n))

C = c_cone_h(n)
print(f"\nC_{2 * n}: {len(C.equalities)} equalities, {len(C.inequalities)} inequalities")
for ineq, facet in facet_correspondence(n).items():
    print(f"  {ineq:10s} pulls back to {facet}")
