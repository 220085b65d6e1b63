import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from vprs import make_partition, make_subset, make_universe, paper_example


@pytest.fixture(scope="session")
def paper():
    return paper_example()


def blocks_union(partition, *names):
    """Union of blocks given by 1-based index, e.g. ``blocks_union(p, 6, 7)`` for E6 and E7."""
    return partition.union_of(n - 1 for n in names)


def label_blocks(partition):
    return [partition.block_labels(b) for b in range(len(partition))]


def make_instance(labels, assignment, members):
    """Build (partition, target) from a block id per element and a membership flag per element."""
    u = make_universe(labels)
    groups = {}
    for lab, a in zip(labels, assignment):
        groups.setdefault(a, []).append(lab)
    partition = make_partition(u, list(groups.values()))
    target = make_subset(u, [lab for lab, m in zip(labels, members) if m])
    return partition, target


def random_instance(rng: random.Random, max_size=10):
    n = rng.randint(1, max_size)
    labels = [f"u{i}" for i in range(n)]
    k = rng.randint(1, n)
    assignment = [rng.randrange(k) for _ in range(n)]
    members = [rng.random() < rng.random() for _ in range(n)]
    return make_instance(labels, assignment, members)


@st.composite
def instances(draw, max_size=12):
    n = draw(st.integers(1, max_size))
    labels = [f"u{i}" for i in range(n)]
    assignment = draw(st.lists(st.integers(0, n - 1), min_size=n, max_size=n))
    members = draw(st.lists(st.booleans(), min_size=n, max_size=n))
    return make_instance(labels, assignment, members)


def precisions():
    return st.fractions(min_value=0, max_value=Fraction(1, 2), max_denominator=24)


@pytest.hookimpl(wrapper=True, tryfirst=True)
def pytest_runtest_makereport(item, call):
    rep = yield
    setattr(item, f"rep_{rep.when}", rep)
    return rep


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok, elapsed in sorted(RESULTS, key=lambda r: r[0] or 0):
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {number}. {title} ({elapsed:.2f} s)")
