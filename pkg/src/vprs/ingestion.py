"""Reading approximation problems from instance documents and CSV tables.

Instance documents are JSON objects::

    {"name": "...", "universe": [...], "blocks": [[...], ...], "target": [...]}

Tables are plain CSV: a header row, object ids in the first column, one
attribute per remaining column. Cells are compared as exact text.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from typing import Optional, Sequence

from .core import Partition, Subset, make_partition, make_subset, make_universe
from .errors import (
    DuplicateObject,
    EmptyAttributeSet,
    EmptyBlock,
    EmptyTable,
    NotCovering,
    NotDisjoint,
    ParseError,
    RaggedRow,
    UnknownAttribute,
    UnknownLabel,
    ValidationError,
)

INSTANCE_KEYS = {"universe", "blocks", "target", "name"}


@dataclass(frozen=True)
class InstanceSpec:
    universe: tuple[str, ...]
    blocks: tuple[tuple[str, ...], ...]
    target: tuple[str, ...]
    name: Optional[str] = None

    def build(self) -> tuple[Partition, Subset]:
        u = make_universe(self.universe)
        return make_partition(u, self.blocks), make_subset(u, self.target)


def _str_list(value, where: str) -> tuple[str, ...]:
    if not isinstance(value, list) or not all(isinstance(v, str) for v in value):
        raise ParseError(f"{where} must be an array of strings")
    return tuple(value)


def parse_instance(document: str) -> InstanceSpec:
    """Parse and fully validate an instance document.

    Validation errors carry a location such as ``blocks[3]`` or ``target``.
    """
    try:
        data = json.loads(document)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno, column=exc.colno) from None
    if not isinstance(data, dict):
        raise ParseError("instance must be a JSON object")
    unknown = sorted(set(data) - INSTANCE_KEYS)
    if unknown:
        raise ParseError(f"unknown key(s): {', '.join(unknown)}")
    missing = sorted({"universe", "blocks", "target"} - set(data))
    if missing:
        raise ParseError(f"missing key(s): {', '.join(missing)}")
    name = data.get("name")
    if name is not None and not isinstance(name, str):
        raise ParseError("name must be a string")

    labels = _str_list(data["universe"], "universe")
    if not isinstance(data["blocks"], list):
        raise ParseError("blocks must be an array of arrays")
    blocks = tuple(_str_list(b, f"blocks[{i}]") for i, b in enumerate(data["blocks"]))
    target = _str_list(data["target"], "target")
    spec = InstanceSpec(labels, blocks, target, name)

    try:
        u = make_universe(labels)
    except ValidationError as exc:
        raise exc.with_location("universe")
    owner: dict[str, int] = {}
    for i, block in enumerate(blocks):
        where = f"blocks[{i}]"
        if not block:
            raise EmptyBlock(i).with_location(where)
        for lab in block:
            if lab not in u:
                raise UnknownLabel(lab).with_location(where)
            if lab in owner:
                raise NotDisjoint(lab).with_location(where)
            owner[lab] = i
    for lab in labels:
        if lab not in owner:
            raise NotCovering(lab).with_location("blocks")
    for lab in target:
        if lab not in u:
            raise UnknownLabel(lab).with_location("target")
    return spec


def emit_instance(spec: InstanceSpec) -> str:
    data: dict = {}
    if spec.name is not None:
        data["name"] = spec.name
    data["universe"] = list(spec.universe)
    data["blocks"] = [list(b) for b in spec.blocks]
    data["target"] = list(spec.target)
    return json.dumps(data, indent=2) + "\n"


def instance_from(partition: Partition, target: Subset, name: Optional[str] = None) -> InstanceSpec:
    return InstanceSpec(
        partition.universe.labels,
        tuple(tuple(b) for b in partition.label_sets()),
        tuple(target.labels()),
        name,
    )


@dataclass(frozen=True)
class InfoTable:
    objects: tuple[str, ...]
    attributes: tuple[str, ...]
    rows: tuple[tuple[str, ...], ...]
    decision: Optional[str] = None

    def column(self, name: str) -> tuple[str, ...]:
        try:
            j = self.attributes.index(name)
        except ValueError:
            raise UnknownAttribute(name) from None
        return tuple(r[j] for r in self.rows)


def parse_table(document: str, decision: Optional[str] = None) -> InfoTable:
    """Read a CSV information table. Values stay as text."""
    reader = csv.reader(io.StringIO(document), quoting=csv.QUOTE_NONE)
    lines = [r for r in reader if r]
    if not lines:
        raise EmptyTable()
    header = [h.strip() for h in lines[0]]
    if len(header) < 2:
        raise ParseError("header needs an id column and at least one attribute", line=1)
    width = len(header)
    objects, rows = [], []
    seen = set()
    for n, raw in enumerate(lines[1:], start=2):
        cells = [c.strip() for c in raw]
        if len(cells) != width or any(c == "" for c in cells):
            raise RaggedRow(n)
        if cells[0] in seen:
            raise DuplicateObject(cells[0])
        seen.add(cells[0])
        objects.append(cells[0])
        rows.append(tuple(cells[1:]))
    if not rows:
        raise EmptyTable()
    attrs = tuple(header[1:])
    if decision is not None and decision not in attrs:
        raise UnknownAttribute(decision)
    return InfoTable(tuple(objects), attrs, tuple(rows), decision)


def indiscernibility(table: InfoTable, attributes: Sequence[str]) -> Partition:
    """Group objects whose values agree on every chosen attribute.

    Blocks appear in order of first occurrence in the table.
    """
    if not attributes:
        raise EmptyAttributeSet()
    cols = []
    for a in attributes:
        if a not in table.attributes:
            raise UnknownAttribute(a)
        cols.append(table.attributes.index(a))
    groups: dict[tuple[str, ...], list[str]] = {}
    for obj, row in zip(table.objects, table.rows):
        groups.setdefault(tuple(row[j] for j in cols), []).append(obj)
    u = make_universe(table.objects)
    return make_partition(u, list(groups.values()))


def target_from_decision(table: InfoTable, decision: str, value: str) -> Subset:
    col = table.column(decision)
    u = make_universe(table.objects)
    return make_subset(u, [o for o, v in zip(table.objects, col) if v == value])
