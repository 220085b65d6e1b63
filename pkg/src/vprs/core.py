"""Ground types: universe, partition into blocks, subsets, exact ratios.

Subsets are stored as Python ints used as bitmaps over the universe's
element indices, so region algebra is a handful of word operations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .errors import (
    DuplicateLabel,
    EmptyBlock,
    EmptyUniverse,
    NotCovering,
    NotDisjoint,
    PrecisionOutOfRange,
    UniverseMismatch,
    UnknownLabel,
    ZeroDenominator,
)

HALF = Fraction(1, 2)


def ratio(num: int, den: int = 1) -> Fraction:
    """Exact rational ``num/den`` in lowest terms, sign on the numerator."""
    if den == 0:
        raise ZeroDenominator()
    return Fraction(num, den)


def as_precision(value) -> Fraction:
    """Coerce ``value`` to an exact precision in the closed interval [0, 1/2].

    Accepts ints, Fractions and strings such as ``"1/3"`` or ``"0.25"``.
    Decimal strings convert exactly, so ``"0.33"`` is 33/100, not 1/3.
    Floats are refused because they cannot carry values like 1/3.
    """
    if isinstance(value, float):
        raise TypeError("precision must be exact; pass a Fraction or a string like '1/3'")
    if isinstance(value, str):
        try:
            value = Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise PrecisionOutOfRange(value) from exc
    else:
        value = Fraction(value)
    if not 0 <= value <= HALF:
        raise PrecisionOutOfRange(value)
    return value


@dataclass(frozen=True, eq=False)
class Universe:
    """Ordered, finite set of uniquely labelled elements."""

    labels: tuple[str, ...]
    _index: dict[str, int] = field(repr=False, compare=False)

    def __len__(self) -> int:
        return len(self.labels)

    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.labels)) - 1

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownLabel(label) from None

    def __contains__(self, label: object) -> bool:
        return label in self._index

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, Universe):
            return NotImplemented
        return self.labels == other.labels

    def __hash__(self) -> int:
        return hash(self.labels)

    def empty(self) -> Subset:
        return Subset(self, 0)

    def full(self) -> Subset:
        return Subset(self, self.full_mask)


def make_universe(labels: Iterable[str]) -> Universe:
    labels = tuple(labels)
    if not labels:
        raise EmptyUniverse()
    index: dict[str, int] = {}
    for i, lab in enumerate(labels):
        if lab in index:
            raise DuplicateLabel(lab)
        index[lab] = i
    return Universe(labels, index)


@dataclass(frozen=True)
class Subset:
    """A subset of a universe held as a membership bitmap.

    Bit ``i`` of ``bits`` is set iff ``universe.labels[i]`` is a member.
    The usual set operators are supported between subsets of the same
    universe: ``|``, ``&``, ``-``, ``^``, ``~`` (complement), ``<=``, ``<``.
    """

    universe: Universe
    bits: int

    def _check(self, other: Subset) -> None:
        if not isinstance(other, Subset):
            raise TypeError(f"expected Subset, got {type(other).__name__}")
        if self.universe != other.universe:
            raise UniverseMismatch()

    def __or__(self, other: Subset) -> Subset:
        self._check(other)
        return Subset(self.universe, self.bits | other.bits)

    def __and__(self, other: Subset) -> Subset:
        self._check(other)
        return Subset(self.universe, self.bits & other.bits)

    def __sub__(self, other: Subset) -> Subset:
        self._check(other)
        return Subset(self.universe, self.bits & ~other.bits)

    def __xor__(self, other: Subset) -> Subset:
        self._check(other)
        return Subset(self.universe, self.bits ^ other.bits)

    def __invert__(self) -> Subset:
        return Subset(self.universe, self.universe.full_mask & ~self.bits)

    def complement(self) -> Subset:
        return ~self

    def __le__(self, other: Subset) -> bool:
        self._check(other)
        return self.bits & ~other.bits == 0

    def __lt__(self, other: Subset) -> bool:
        return self <= other and self.bits != other.bits

    def __ge__(self, other: Subset) -> bool:
        return other <= self

    def __gt__(self, other: Subset) -> bool:
        return other < self

    def issubset(self, other: Subset) -> bool:
        return self <= other

    def isdisjoint(self, other: Subset) -> bool:
        self._check(other)
        return self.bits & other.bits == 0

    def __len__(self) -> int:
        return bin(self.bits).count("1")

    def __bool__(self) -> bool:
        return self.bits != 0

    def __contains__(self, label: object) -> bool:
        if not isinstance(label, str) or label not in self.universe:
            return False
        return bool(self.bits >> self.universe.index(label) & 1)

    def indices(self) -> Iterator[int]:
        bits, i = self.bits, 0
        while bits:
            if bits & 1:
                yield i
            bits >>= 1
            i += 1

    def __iter__(self) -> Iterator[str]:
        labels = self.universe.labels
        return (labels[i] for i in self.indices())

    def labels(self) -> list[str]:
        """Member labels in universe order."""
        return list(self)

    def __repr__(self) -> str:
        return f"Subset({{{', '.join(self)}}})"


def make_subset(universe: Universe, labels: Iterable[str]) -> Subset:
    bits = 0
    for lab in labels:
        bits |= 1 << universe.index(lab)
    return Subset(universe, bits)


@dataclass(frozen=True, eq=False)
class Partition:
    """Equivalence classes ("blocks") of a universe, in the order given.

    ``blocks[b]`` is a frozenset of element indices; ``block_of[e]`` is the
    block holding element ``e``; ``masks[b]`` is block ``b`` as a bitmap.
    """

    universe: Universe
    blocks: tuple[frozenset[int], ...]
    block_of: tuple[int, ...]
    masks: tuple[int, ...] = field(repr=False)

    def __len__(self) -> int:
        return len(self.blocks)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return self.universe == other.universe and self.masks == other.masks

    def __hash__(self) -> int:
        return hash((self.universe, self.masks))

    def block(self, b: int) -> Subset:
        return Subset(self.universe, self.masks[b])

    def block_labels(self, b: int) -> list[str]:
        return self.block(b).labels()

    def union_of(self, block_indices: Iterable[int]) -> Subset:
        bits = 0
        for b in block_indices:
            bits |= self.masks[b]
        return Subset(self.universe, bits)

    def blocks_within(self, subset: Subset) -> list[int]:
        """Indices of blocks wholly contained in ``subset``, ascending."""
        if subset.universe != self.universe:
            raise UniverseMismatch()
        return [b for b, m in enumerate(self.masks) if m & ~subset.bits == 0]

    def is_definable(self, subset: Subset) -> bool:
        """True when ``subset`` is a union of whole blocks."""
        if subset.universe != self.universe:
            raise UniverseMismatch()
        return all(m & subset.bits in (0, m) for m in self.masks)

    def refines(self, other: Partition) -> bool:
        """True when every block of ``self`` lies inside a block of ``other``."""
        if self.universe != other.universe:
            raise UniverseMismatch()
        for m in self.masks:
            first = (m & -m).bit_length() - 1
            if m & ~other.masks[other.block_of[first]]:
                return False
        return True

    def label_sets(self) -> list[list[str]]:
        return [self.block_labels(b) for b in range(len(self.blocks))]


def make_partition(universe: Universe, blocks: Sequence[Iterable[str]]) -> Partition:
    """Validate ``blocks`` as a partition of ``universe`` and build it."""
    owner: dict[int, int] = {}
    frozen = []
    masks = []
    for b, block in enumerate(blocks):
        members = []
        for lab in block:
            i = universe.index(lab)
            if i in owner:
                raise NotDisjoint(lab)
            owner[i] = b
            members.append(i)
        if not members:
            raise EmptyBlock(b)
        frozen.append(frozenset(members))
        masks.append(sum(1 << i for i in members))
    for i, lab in enumerate(universe.labels):
        if i not in owner:
            raise NotCovering(lab)
    block_of = tuple(owner[i] for i in range(len(universe)))
    return Partition(universe, tuple(frozen), block_of, tuple(masks))


def partition_from_labels(labels_by_block: Sequence[Sequence[str]]) -> Partition:
    """Build universe and partition at once; element order follows the blocks."""
    universe = make_universe(lab for block in labels_by_block for lab in block)
    return make_partition(universe, labels_by_block)
