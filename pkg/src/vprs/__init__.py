"""Exact rough-set, variable-precision (VPRS) and variable-error (VPRSVE)
approximations over finite approximation spaces, plus the join/meet lattice
algebra of VPRS families."""

from importlib import resources

from .approximation import (
    Approximation,
    ThresholdProfile,
    critical_values,
    degrees,
    overlap_degree,
    pawlak,
    probe_points,
    sweep,
    thresholds,
    vprs,
    vprsve,
)
from .core import (
    Partition,
    Subset,
    Universe,
    as_precision,
    make_partition,
    make_subset,
    make_universe,
    ratio,
)
from .errors import *  # noqa: F401,F403
from .ingestion import (
    InfoTable,
    InstanceSpec,
    emit_instance,
    indiscernibility,
    instance_from,
    parse_instance,
    parse_table,
    target_from_decision,
)
from .lattice import (
    LatticeElement,
    LawReport,
    chain_report,
    check_laws,
    closure,
    element_of,
    equal,
    family,
    join,
    leq,
    make_grid,
    meet,
    parse_grid,
    vprsve_family,
)
from .verify import check_instance

__version__ = "0.1.0"


def paper_example_text() -> str:
    """The bundled 25-element worked example as a JSON instance document."""
    return resources.files(__package__).joinpath("data/paper-a.json").read_text(encoding="utf-8")


def paper_example() -> tuple[Partition, Subset]:
    return parse_instance(paper_example_text()).build()
