"""Pawlak, variable-precision and variable-error rough approximations.

For a block ``E`` and target ``X`` the overlap degree is
``d(E, X) = 1 - |E & X| / |E|``: 0 when ``E`` lies inside ``X``, 1 when the
two are disjoint. With classification error ``beta`` in [0, 1/2]:

* lower(beta) is the union of blocks with ``d <= beta``;
* upper(beta) is the union of blocks with ``d < 1`` and ``d <= 1 - beta``.

All comparisons are exact (``fractions.Fraction``) and inclusive, so a beta
sitting exactly on a block's degree admits that block. ``beta = 0`` gives the
classical Pawlak pair, and ``beta = 1/2`` always gives an empty boundary.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .core import HALF, Partition, Subset, as_precision
from .errors import UniverseMismatch

ONE = Fraction(1)
ZERO = Fraction(0)


@dataclass(frozen=True)
class Approximation:
    """Lower/upper pair with its three regions.

    ``beta`` is the error used for the lower approximation and ``gamma`` the
    one used for the upper; both are 0 for a Pawlak rough set and equal for a
    plain VPRS.
    """

    partition: Partition
    target: Subset
    lower: Subset
    upper: Subset
    beta: Fraction = ZERO
    gamma: Fraction = ZERO

    @property
    def positive(self) -> Subset:
        """Region definitely in the target (same set as ``lower``)."""
        return self.lower

    @property
    def boundary(self) -> Subset:
        return self.upper - self.lower

    @property
    def negative(self) -> Subset:
        return ~self.upper

    @property
    def accuracy(self) -> Fraction:
        """``|lower| / |upper|``; taken as 1 when the upper set is empty."""
        n_up = len(self.upper)
        if n_up == 0:
            return ONE
        return Fraction(len(self.lower), n_up)

    def regions(self) -> dict[str, Subset]:
        return {
            "lower": self.lower,
            "upper": self.upper,
            "D": self.positive,
            "BN": self.boundary,
            "N": self.negative,
        }

    def blocks(self, region: str) -> list[int]:
        """Block indices making up ``region`` (one of the keys of :meth:`regions`)."""
        return self.partition.blocks_within(self.regions()[region])

    def same_sets(self, other: Approximation) -> bool:
        return self.lower == other.lower and self.upper == other.upper


@dataclass(frozen=True)
class ThresholdProfile:
    degrees: tuple[Fraction, ...]
    critical: tuple[Fraction, ...]


def _check_universe(partition: Partition, target: Subset) -> None:
    if partition.universe != target.universe:
        raise UniverseMismatch()


def overlap_degree(partition: Partition, block: int, target: Subset) -> Fraction:
    """``1 - |E & X| / |E|`` for block ``E = partition.blocks[block]``."""
    _check_universe(partition, target)
    mask = partition.masks[block]
    hit = bin(mask & target.bits).count("1")
    return 1 - Fraction(hit, len(partition.blocks[block]))


def degrees(partition: Partition, target: Subset) -> tuple[Fraction, ...]:
    _check_universe(partition, target)
    out = []
    for b, mask in enumerate(partition.masks):
        hit = bin(mask & target.bits).count("1")
        out.append(1 - Fraction(hit, len(partition.blocks[b])))
    return tuple(out)


def _lower_bits(partition: Partition, degs, beta: Fraction) -> int:
    bits = 0
    for mask, d in zip(partition.masks, degs):
        if d <= beta:
            bits |= mask
    return bits


def _upper_bits(partition: Partition, degs, beta: Fraction) -> int:
    cap = 1 - beta
    bits = 0
    for mask, d in zip(partition.masks, degs):
        if d < 1 and d <= cap:
            bits |= mask
    return bits


def vprsve(partition: Partition, target: Subset, beta, gamma, *, degs=None) -> Approximation:
    """Lower approximation at error ``beta``, upper approximation at ``gamma``.

    ``degs`` may carry precomputed overlap degrees (see :func:`degrees`) when
    evaluating many precisions against one target.
    """
    beta, gamma = as_precision(beta), as_precision(gamma)
    if degs is None:
        degs = degrees(partition, target)
    u = partition.universe
    return Approximation(
        partition,
        target,
        Subset(u, _lower_bits(partition, degs, beta)),
        Subset(u, _upper_bits(partition, degs, gamma)),
        beta,
        gamma,
    )


def vprs(partition: Partition, target: Subset, beta, *, degs=None) -> Approximation:
    """Variable-precision rough set at classification error ``beta``."""
    return vprsve(partition, target, beta, beta, degs=degs)


def pawlak(partition: Partition, target: Subset) -> Approximation:
    """Classical rough set: blocks inside ``target`` / blocks touching it."""
    return vprsve(partition, target, ZERO, ZERO)


def critical_values(degs) -> tuple[Fraction, ...]:
    """Precisions in (0, 1/2] at which some block enters or leaves a region."""
    cands = set()
    for d in degs:
        for c in (d, 1 - d):
            if 0 < c <= HALF:
                cands.add(c)
    return tuple(sorted(cands))


def thresholds(partition: Partition, target: Subset) -> ThresholdProfile:
    """Per-block overlap degrees plus the sorted critical precisions.

    Lower(beta) picks up a block exactly when beta reaches its degree ``d``;
    upper(beta) drops a block just after beta passes ``1 - d``. The region
    map is therefore a step function of beta that only changes at the
    critical values, and is constant on each open interval between them.
    """
    degs = degrees(partition, target)
    return ThresholdProfile(degs, critical_values(degs))


def sweep(partition: Partition, target: Subset) -> list[tuple[Fraction, Approximation]]:
    """VPRS at ``beta = 0`` and at every critical value, ascending."""
    degs = degrees(partition, target)
    betas = (ZERO,) + critical_values(degs)
    return [(b, vprs(partition, target, b, degs=degs)) for b in betas]


def probe_points(critical) -> list[Fraction]:
    """Every critical value plus one representative of each open gap.

    Together these realise every distinct VPRS of a target: regions are
    constant on each open interval between consecutive critical values.
    """
    edges = [ZERO, *critical]
    if edges[-1] != HALF:
        edges.append(HALF)
    points = [ZERO]
    for lo, hi in zip(edges, edges[1:]):
        points.append((lo + hi) / 2)
        points.append(hi)
    return points
