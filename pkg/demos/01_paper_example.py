"""Rough, VPRS and VPRSVE approximations of the bundled 25-element example.

Run:  python demos/01_paper_example.py
"""
from fractions import Fraction

import vprs

partition, A = vprs.paper_example()


def show(title, approx):
    names = lambda region: ", ".join(f"E{b + 1}" for b in approx.blocks(region))
    print(title)
    for region in ("lower", "upper", "D", "BN", "N"):
        print(f"  {region:>5}: {{{names(region)}}}")
    print(f"  accuracy: {approx.accuracy}")


# The blocks E1..E12 and the target set.
for b in range(len(partition)):
    print(f"E{b + 1} = {partition.block_labels(b)}")
print("A =", A.labels())
print()

# Classical (Pawlak) rough set: lower keeps blocks inside A, upper keeps blocks touching A.
show("Pawlak", vprs.pawlak(partition, A))

# Allowing a classification error beta moves partially-covered blocks into the
# lower approximation and drops thinly-covered ones from the upper approximation.
for beta in ("1/4", "1/3", "1/2"):
    show(f"VPRS beta={beta}", vprs.vprs(partition, A, beta))

# Decimal literals are exact: 0.33 is 33/100, which is *below* the degree 1/3 of E3.
print("\nlower(0.33) == lower(1/3)?",
      vprs.vprs(partition, A, "0.33").lower == vprs.vprs(partition, A, Fraction(1, 3)).lower)

# Different errors for the lower (beta) and upper (gamma) approximations.
show("\nVPRSVE beta=1/4 gamma=1/3", vprs.vprsve(partition, A, "1/4", "1/3"))
