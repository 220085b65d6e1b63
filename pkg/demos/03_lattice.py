"""Join and meet of VPRS pairs, their closure, and a check of the lattice laws.

Run:  python demos/03_lattice.py
"""
from fractions import Fraction

import vprs

partition, A = vprs.paper_example()
grid = vprs.parse_grid("0,1/4,1/3,1/2")
family = vprs.family(partition, A, grid)

x, y = family[1], family[2]  # beta = 1/4 and beta = 1/3
print("X(1/4) <= X(1/3)?", vprs.leq(x, y), "  X(1/3) <= X(1/4)?", vprs.leq(y, x))

# join takes the larger lower (at the larger beta) and the larger upper (at the smaller beta)
j = vprs.join(x, y)
print("join provenance (lower at, upper at):", tuple(str(b) for b in j.provenance))
m = vprs.meet(x, y)
print("meet provenance (lower at, upper at):", tuple(str(b) for b in m.provenance))

# The raw family is not closed: the join above is not X(beta) for any beta.
print("family closed?", vprs.check_laws(family).closed)

# Its closure is the set of variable-error pairs (lower(bi), upper(bj)).
closed = vprs.closure(family)
print("closure size:", len(closed))
same = {e.key for e in closed} == {e.key for e in vprs.vprsve_family(partition, A, grid)}
print("closure == VPRSVE pairs over the grid?", same)

report = vprs.check_laws(closed)
print(f"checked {report.checked_triples} triples over {report.element_count} elements")
for name, law in report.laws.items():
    print(f"  {name:>14}: {'PASS' if law.holds else 'FAIL'}")

# Equality is about sets, not about the beta that produced them.
print("X(26/100) == X(30/100)?",
      vprs.element_of(partition, A, Fraction(26, 100)) == vprs.element_of(partition, A, Fraction(30, 100)))
