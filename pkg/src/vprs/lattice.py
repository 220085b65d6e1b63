"""Join/meet algebra on (lower, upper) approximation pairs.

Elements compare by their realised sets only; the precisions that produced
them are kept as provenance but never affect equality or order. A family of
plain VPRS pairs is usually *not* closed under join and meet (the join of
X(b1) and X(b2) mixes lower(max) with upper(min)), so the lattice laws are
checked on the closure, which for one target is exactly the set of
variable-error pairs (lower(bi), upper(bj)).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable, Iterable, Optional, Sequence

from .approximation import Approximation, degrees, pawlak, vprs, vprsve
from .core import HALF, Partition, Subset, as_precision
from .errors import ChainViolation, InvalidGrid, PrecisionOutOfRange, UniverseMismatch

ZERO = Fraction(0)


@dataclass(frozen=True, eq=False)
class LatticeElement:
    lower: Subset
    upper: Subset
    provenance: Optional[tuple[Fraction, Fraction]] = None

    def __post_init__(self):
        if self.lower.universe != self.upper.universe:
            raise UniverseMismatch()
        if not self.lower <= self.upper:
            raise ValueError("lower approximation must be contained in the upper one")

    @classmethod
    def from_approximation(cls, approx: Approximation) -> LatticeElement:
        return cls(approx.lower, approx.upper, (approx.beta, approx.gamma))

    @property
    def universe(self):
        return self.lower.universe

    @property
    def key(self) -> tuple[int, int]:
        return (self.lower.bits, self.upper.bits)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LatticeElement):
            return NotImplemented
        return equal(self, other)

    def __hash__(self) -> int:
        return hash(self.key)

    def describe(self) -> str:
        if self.provenance is None:
            return f"({self.lower}, {self.upper})"
        b, g = self.provenance
        tag = f"X({b})" if b == g else f"X({b},{g})"
        return f"{tag}=({self.lower}, {self.upper})"


def _same_universe(a: LatticeElement, b: LatticeElement) -> None:
    if a.universe != b.universe:
        raise UniverseMismatch()


def element_of(partition: Partition, target: Subset, beta) -> LatticeElement:
    return LatticeElement.from_approximation(vprs(partition, target, beta))


def leq(a: LatticeElement, b: LatticeElement) -> bool:
    _same_universe(a, b)
    return a.lower <= b.lower and a.upper <= b.upper


def equal(a: LatticeElement, b: LatticeElement) -> bool:
    _same_universe(a, b)
    return a.key == b.key


def _merge_prov(a, b, pick_lower, pick_upper):
    if a.provenance is None or b.provenance is None:
        return None
    return (
        pick_lower(a.provenance[0], b.provenance[0]),
        pick_upper(a.provenance[1], b.provenance[1]),
    )


def join(a: LatticeElement, b: LatticeElement) -> LatticeElement:
    """Component-wise union.

    For two members of one family this is (lower(max beta), upper(min beta)),
    and the provenance is recorded that way.
    """
    _same_universe(a, b)
    return LatticeElement(a.lower | b.lower, a.upper | b.upper, _merge_prov(a, b, max, min))


def meet(a: LatticeElement, b: LatticeElement) -> LatticeElement:
    """Component-wise intersection; dual of :func:`join`."""
    _same_universe(a, b)
    return LatticeElement(a.lower & b.lower, a.upper & b.upper, _merge_prov(a, b, min, max))


def make_grid(values: Iterable) -> tuple[Fraction, ...]:
    """Sorted, deduplicated tuple of precisions, each within [0, 1/2]."""
    vals = []
    for v in values:
        try:
            vals.append(as_precision(v))
        except PrecisionOutOfRange:
            raise
        except (TypeError, ValueError) as exc:
            raise InvalidGrid(str(exc)) from exc
    if not vals:
        raise InvalidGrid("no values")
    return tuple(sorted(set(vals)))


def parse_grid(text: str) -> tuple[Fraction, ...]:
    """Parse a comma-separated list such as ``"0,1/4,1/3,1/2"``."""
    parts = [p.strip() for p in text.split(",")]
    if any(not p for p in parts):
        raise InvalidGrid(f"empty entry in {text!r}")
    return make_grid(parts)


def family(partition: Partition, target: Subset, grid: Sequence) -> list[LatticeElement]:
    """One VPRS element per grid value, in grid order (duplicates kept)."""
    degs = degrees(partition, target)
    return [
        LatticeElement.from_approximation(vprs(partition, target, b, degs=degs))
        for b in make_grid(grid)
    ]


def vprsve_family(partition: Partition, target: Subset, grid: Sequence) -> list[LatticeElement]:
    """All variable-error pairs (lower(bi), upper(bj)) over the grid, deduplicated."""
    degs = degrees(partition, target)
    seen = {}
    for b, g in product(make_grid(grid), repeat=2):
        e = LatticeElement.from_approximation(vprsve(partition, target, b, g, degs=degs))
        seen.setdefault(e.key, e)
    return list(seen.values())


def dedupe(elements: Iterable[LatticeElement]) -> list[LatticeElement]:
    seen: dict[tuple[int, int], LatticeElement] = {}
    universe = None
    for e in elements:
        if universe is None:
            universe = e.universe
        elif e.universe != universe:
            raise UniverseMismatch()
        seen.setdefault(e.key, e)
    return list(seen.values())


def closure(elements: Iterable[LatticeElement]) -> list[LatticeElement]:
    """Smallest join/meet-closed set containing ``elements``.

    Order: inputs first (first occurrence wins), then new elements in the
    order they were generated.
    """
    out = dedupe(elements)
    index = {e.key: e for e in out}
    frontier = list(out)
    while frontier:
        fresh = []
        for a in frontier:
            for b in list(out):
                for c in (join(a, b), meet(a, b)):
                    if c.key not in index:
                        index[c.key] = c
                        out.append(c)
                        fresh.append(c)
        frontier = fresh
    return out


def cayley(elements: Sequence[LatticeElement], op: Callable) -> list[list[Optional[int]]]:
    """Operation table by element index; ``None`` where the result escapes the set."""
    pos = {e.key: i for i, e in enumerate(elements)}
    return [[pos.get(op(a, b).key) for b in elements] for a in elements]


@dataclass
class LawResult:
    holds: bool = True
    counterexample: Optional[dict] = None

    def fail(self, operands, lhs, rhs):
        if self.holds:
            self.holds = False
            self.counterexample = {
                "operands": [e.describe() for e in operands],
                "lhs": lhs.describe(),
                "rhs": rhs.describe(),
            }


@dataclass
class LawReport:
    laws: dict[str, LawResult]
    element_count: int
    checked_triples: int
    closed: bool = True
    escape: Optional[dict] = None

    @property
    def all_hold(self) -> bool:
        return all(r.holds for r in self.laws.values())


LAWS = ("idempotence", "commutativity", "associativity", "absorption")


def check_laws(elements: Iterable[LatticeElement]) -> LawReport:
    """Exhaustively test the four lattice identities for join and meet.

    Pairs and triples are scanned in lexicographic index order, so the
    recorded counterexample (if any) is the first one in that order. Also
    records whether the set is closed under join and meet.
    """
    elems = dedupe(elements)
    keys = {e.key for e in elems}
    laws = {name: LawResult() for name in LAWS}
    closed, escape = True, None

    for x in elems:
        for op in (join, meet):
            r = op(x, x)
            if r.key != x.key:
                laws["idempotence"].fail((x,), r, x)

    for x, y in product(elems, repeat=2):
        j, m = join(x, y), meet(x, y)
        if closed:
            for name, r in (("join", j), ("meet", m)):
                if r.key not in keys:
                    closed = False
                    escape = {"operation": name, "operands": [x.describe(), y.describe()],
                              "result": r.describe()}
                    break
        if j.key != join(y, x).key:
            laws["commutativity"].fail((x, y), j, join(y, x))
        if m.key != meet(y, x).key:
            laws["commutativity"].fail((x, y), m, meet(y, x))
        lhs = meet(x, j)
        if lhs.key != x.key:
            laws["absorption"].fail((x, y), lhs, x)
        lhs = join(x, m)
        if lhs.key != x.key:
            laws["absorption"].fail((x, y), lhs, x)

    triples = 0
    for x, y, z in product(elems, repeat=3):
        triples += 1
        for op in (join, meet):
            lhs, rhs = op(x, op(y, z)), op(op(x, y), z)
            if lhs.key != rhs.key:
                laws["associativity"].fail((x, y, z), lhs, rhs)

    return LawReport(laws, len(elems), triples, closed, escape)


@dataclass
class ChainReport:
    grid: tuple[Fraction, ...]
    lower_sizes: list[int]
    upper_sizes: list[int]
    positive_sizes: list[int]
    boundary_sizes: list[int]
    negative_sizes: list[int]
    bounds: dict[str, str] = field(default_factory=dict)


def chain_report(partition: Partition, target: Subset, grid: Sequence) -> ChainReport:
    """Confirm the region chains over ``grid`` and their extreme elements.

    Checks that lower, D and N grow with beta while upper and BN shrink, and
    that every member lies between the beta = 0 and beta = 1/2 values of its
    family (lower/D/N: least at 0, greatest at 1/2; upper/BN the reverse).
    Raises :class:`ChainViolation` on the first failure.
    """
    grid = make_grid(grid)
    degs = degrees(partition, target)
    approx = [vprs(partition, target, b, degs=degs) for b in grid]
    at0 = pawlak(partition, target)
    at_half = vprs(partition, target, HALF, degs=degs)

    ascending = {"lower": lambda a: a.lower, "D": lambda a: a.positive, "N": lambda a: a.negative}
    descending = {"upper": lambda a: a.upper, "BN": lambda a: a.boundary}

    for i in range(len(grid) - 1):
        a, b = approx[i], approx[i + 1]
        pair = (grid[i], grid[i + 1])
        for name, get in ascending.items():
            if not get(a) <= get(b):
                raise ChainViolation(name, pair, "expected growth")
        for name, get in descending.items():
            if not get(b) <= get(a):
                raise ChainViolation(name, pair, "expected shrinkage")

    for b, a in zip(grid, approx):
        for name, get in ascending.items():
            if not get(at0) <= get(a) <= get(at_half):
                raise ChainViolation(name, (ZERO, b), "outside [value at 0, value at 1/2]")
        for name, get in descending.items():
            if not get(at_half) <= get(a) <= get(at0):
                raise ChainViolation(name, (b, HALF), "outside [value at 1/2, value at 0]")
    if not at_half.lower <= at_half.upper:
        raise ChainViolation("lower/upper", (HALF, HALF), "lower(1/2) not inside upper(1/2)")

    return ChainReport(
        grid,
        [len(a.lower) for a in approx],
        [len(a.upper) for a in approx],
        [len(a.positive) for a in approx],
        [len(a.boundary) for a in approx],
        [len(a.negative) for a in approx],
        {
            "lower": "glb at beta=0, lub at beta=1/2",
            "upper": "lub at beta=0, glb at beta=1/2",
            "D": "least at beta=0, greatest at beta=1/2",
            "N": "least at beta=0, greatest at beta=1/2",
            "BN": "greatest at beta=0, least at beta=1/2",
        },
    )
