"""Rank 2 walkthrough: the chart, its degeneration at an interior point of
the degree cone, and the resulting toric initial ideal.

    python demos/rank_two_walkthrough.py
"""

from spfflv.chart import in_d, p_J
from spfflv.cone import c_cone_h, example_point, membership, tropical_point, tropical_vector
from spfflv.groebner import buchberger, hilbert_count
from spfflv.fflv import weyl_dim
from spfflv.pluecker import generators, pluecker_indices, var_name

n = 2
d = example_point()
print("degree point", d, "->", membership(d).status)

print("\nchart images and their d-initial terms")
for J in pluecker_indices(n):
    p = p_J(n, J)
    print(f"  {var_name(J, n):10s} {str(p):40s} {in_d(p, d)}")

v = tropical_point(d)
print("\ntropical point w(d)")
for J, x in v.items():
    print(f"  {var_name(J, n):10s} {x}")
print("  inside C_4:", c_cone_h(n).contains(tropical_vector(v, n)))

gb = buchberger(generators(n), tropical_vector(v, n))
print("\ninitial ideal generators")
for f in gb.initial_forms():
    print("  ", f)

for lam in [(1, 0), (0, 1), (1, 1), (2, 1)]:
    print(f"  multidegree {lam}: {hilbert_count(gb, lam, n)} standard monomials, dim V = {weyl_dim(lam)}")
