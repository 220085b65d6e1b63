"""One-shot structural verification of a single (partition, target) instance.

Every check is evaluated over the probe grid of the instance: beta = 0, each
critical value, and a point inside every open gap between them. That grid
realises every distinct VPRS the target has, so a check passing here passes
for all beta in [0, 1/2].
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Callable

from .approximation import Approximation, degrees, pawlak, probe_points, thresholds, vprs, vprsve
from .core import HALF, Partition, Subset
from .errors import ChainViolation
from .lattice import (
    LatticeElement,
    chain_report,
    check_laws,
    closure,
    family,
    join,
    meet,
    vprsve_family,
)


@dataclass
class CheckResult:
    name: str
    description: str
    passed: bool
    detail: str = ""


class _Fail(Exception):
    pass


def _expect(cond: bool, msg: str) -> None:
    if not cond:
        raise _Fail(msg)


def _partitions_universe(a: Approximation) -> bool:
    d, bn, n = a.positive, a.boundary, a.negative
    return (d | bn | n) == a.target.universe.full() and d.isdisjoint(bn) \
        and bn.isdisjoint(n) and d.isdisjoint(n)


def check_instance(partition: Partition, target: Subset) -> list[CheckResult]:
    """Run every structural check and return one result per check, in order."""
    degs = degrees(partition, target)
    grid = probe_points(thresholds(partition, target).critical)
    approx = {b: vprs(partition, target, b, degs=degs) for b in grid}
    base = pawlak(partition, target)

    def region_partition():
        for b, a in approx.items():
            _expect(_partitions_universe(a), f"beta={b}: D, BN, N do not partition U")
            _expect(a.lower <= a.upper, f"beta={b}: lower not inside upper")

    def definable():
        for b, a in approx.items():
            _expect(partition.is_definable(a.lower), f"beta={b}: lower splits a block")
            _expect(partition.is_definable(a.upper), f"beta={b}: upper splits a block")

    def beta_zero():
        _expect(approx[Fraction(0)].same_sets(base), "vprs at beta=0 differs from Pawlak")

    def monotone():
        for b1, b2 in combinations(grid, 2):
            a1, a2 = approx[b1], approx[b2]
            where = f"beta {b1} < {b2}"
            _expect(a1.lower <= a2.lower, f"{where}: lower shrank")
            _expect(a2.upper <= a1.upper, f"{where}: upper grew")
            _expect(a1.negative <= a2.negative, f"{where}: N shrank")
            _expect(a2.boundary <= a1.boundary, f"{where}: BN grew")
            _expect(a1.accuracy <= a2.accuracy, f"{where}: accuracy fell")

    def chains():
        try:
            chain_report(partition, target, grid)
        except ChainViolation as exc:
            raise _Fail(str(exc)) from None

    def extremes():
        top = approx[HALF]
        _expect(top.lower <= top.upper, "lower(1/2) not inside upper(1/2)")
        _expect(not top.boundary, "BN(1/2) is not empty")
        for b, a in approx.items():
            _expect(base.lower <= a.lower <= top.lower, f"beta={b}: lower outside its bounds")
            _expect(top.upper <= a.upper <= base.upper, f"beta={b}: upper outside its bounds")

    def set_identities():
        for bi, bj in combinations(grid, 2):
            ai, aj = approx[bi], approx[bj]
            _expect((ai.lower | aj.lower) == aj.lower, f"lower({bi}) | lower({bj}) != lower({bj})")
            _expect((ai.lower & aj.lower) == ai.lower, f"lower({bi}) & lower({bj}) != lower({bi})")
            _expect((ai.upper | aj.upper) == ai.upper, f"upper({bi}) | upper({bj}) != upper({bi})")
            _expect((ai.upper & aj.upper) == aj.upper, f"upper({bi}) & upper({bj}) != upper({bj})")

    def normal_forms():
        for bi, bj in product(grid, repeat=2):
            if bi > bj:
                continue
            ei = LatticeElement.from_approximation(approx[bi])
            ej = LatticeElement.from_approximation(approx[bj])
            j, m = join(ei, ej), meet(ei, ej)
            _expect(j.lower == approx[bj].lower and j.upper == approx[bi].upper,
                    f"join at ({bi}, {bj}) is not (lower({bj}), upper({bi}))")
            _expect(m.lower == approx[bi].lower and m.upper == approx[bj].upper,
                    f"meet at ({bi}, {bj}) is not (lower({bi}), upper({bj}))")

    def lattice_laws():
        closed = closure(family(partition, target, grid))
        report = check_laws(closed)
        bad = [name for name, r in report.laws.items() if not r.holds]
        _expect(not bad, f"laws failing on closure: {', '.join(bad)}")
        _expect(report.closed, "closure is not closed under join/meet")
        pairs = {e.key for e in vprsve_family(partition, target, grid)}
        _expect({e.key for e in closed} == pairs, "closure differs from the variable-error pairs")

    def variable_error():
        for b, g in product(grid, repeat=2):
            a = vprsve(partition, target, b, g, degs=degs)
            _expect(a.positive == approx[b].positive, f"D({b},{g}) != D({b})")
            _expect(a.negative == approx[g].negative, f"N({b},{g}) != N({g})")
            _expect(_partitions_universe(a), f"({b},{g}): D, BN, N do not partition U")

    checks: list[tuple[str, str, Callable[[], None]]] = [
        ("regions", "D, BN, N partition U for every beta", region_partition),
        ("definability", "lower and upper are unions of whole blocks", definable),
        ("pawlak", "beta = 0 reproduces the Pawlak rough set", beta_zero),
        ("monotonicity", "lower, D, N grow and upper, BN shrink with beta; accuracy rises", monotone),
        ("chains", "D, N, BN families are chains with the expected extremes", chains),
        ("bounds", "lub/glb of lower and upper families sit at beta = 0 and 1/2", extremes),
        ("set-identities", "unions/intersections of lowers and of uppers pick an endpoint", set_identities),
        ("normal-forms", "join = (lower(bj), upper(bi)), meet = (lower(bi), upper(bj))", normal_forms),
        ("lattice", "closure satisfies idempotence, commutativity, associativity, absorption", lattice_laws),
        ("variable-error", "D(b,g) = D(b), N(b,g) = N(g), regions partition U", variable_error),
    ]
    results = []
    for name, desc, fn in checks:
        try:
            fn()
            results.append(CheckResult(name, desc, True))
        except _Fail as exc:
            results.append(CheckResult(name, desc, False, str(exc)))
    return results
