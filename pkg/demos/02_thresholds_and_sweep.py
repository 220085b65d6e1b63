"""Where do the approximations change as beta moves through [0, 1/2]?

Run:  python demos/02_thresholds_and_sweep.py
"""
import vprs

partition, A = vprs.paper_example()
profile = vprs.thresholds(partition, A)

# Overlap degree of each block: 0 = inside A, 1 = disjoint from A.
for b, d in enumerate(profile.degrees):
    print(f"d(E{b + 1}, A) = {d}")

# A block enters the lower approximation once beta reaches d, and leaves the
# upper approximation once beta passes 1 - d. Those values in (0, 1/2] are critical.
print("critical:", [str(c) for c in profile.critical])

print(f"\n{'beta':>5} {'|lower|':>8} {'|upper|':>8} {'accuracy':>9}")
for beta, approx in vprs.sweep(partition, A):
    print(f"{str(beta):>5} {len(approx.lower):>8} {len(approx.upper):>8} {str(approx.accuracy):>9}")

# Between two critical values the regions are constant, but the value *at* a
# critical point can differ from both sides. probe_points covers all cases.
seen = {}
for beta in vprs.probe_points(profile.critical):
    approx = vprs.vprs(partition, A, beta)
    seen.setdefault((approx.lower, approx.upper), beta)
print(f"\ndistinct VPRS of A over [0, 1/2]: {len(seen)}")
for (lower, upper), beta in seen.items():
    print(f"  first at beta={beta}: |lower|={len(lower)}, |upper|={len(upper)}")
