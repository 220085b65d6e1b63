import random
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings

from vprs import (
    ChainViolation,
    InvalidGrid,
    LatticeElement,
    PrecisionOutOfRange,
    UniverseMismatch,
    chain_report,
    check_laws,
    closure,
    element_of,
    equal,
    family,
    join,
    leq,
    make_grid,
    make_universe,
    meet,
    parse_grid,
    thresholds,
    vprs,
    vprsve_family,
)
from vprs import lattice as lattice_mod

from conftest import blocks_union as E, instances, label_blocks, precisions, random_instance
from oracle import brute_vprsve

F = Fraction
PAPER_GRID = [0, F(1, 4), F(1, 3), F(1, 2)]


def pair(p, lower, upper):
    return LatticeElement(E(p, *lower), E(p, *upper))


class TestPaperElements:
    def test_element_of(self, paper):
        p, a = paper
        assert element_of(p, a, F(1, 4)) == pair(p, [6, 7], [2, 3, 6, 7, 10, 11])
        assert element_of(p, a, 0) == pair(p, [6], [2, 3, 6, 7, 10, 11])
        top = element_of(p, a, F(1, 2))
        assert top == pair(p, [2, 3, 6, 7], [2, 3, 6, 7])
        assert top.provenance == (F(1, 2), F(1, 2))

    def test_leq(self, paper):
        p, a = paper
        a0 = element_of(p, a, 0)
        mixed = LatticeElement(vprs(p, a, F(1, 4)).lower, vprs(p, a, 0).upper)
        assert leq(a0, mixed)
        assert leq(a0, a0)
        q, t = element_of(p, a, F(1, 4)), element_of(p, a, F(1, 3))
        assert not leq(q, t) and not leq(t, q)

    def test_equal(self, paper):
        p, a = paper
        assert equal(element_of(p, a, F(26, 100)), element_of(p, a, F(30, 100)))
        assert not equal(element_of(p, a, F(1, 4)), element_of(p, a, F(1, 3)))
        x = element_of(p, a, F(1, 3))
        assert equal(x, x)

    def test_join(self, paper):
        p, a = paper
        q, t = element_of(p, a, F(1, 4)), element_of(p, a, F(1, 3))
        j = join(q, t)
        assert j == pair(p, [3, 6, 7], [2, 3, 6, 7, 10, 11])
        assert j.provenance == (F(1, 3), F(1, 4))
        assert join(q, q) == q
        j = join(element_of(p, a, 0), element_of(p, a, F(1, 2)))
        assert j == pair(p, [2, 3, 6, 7], [2, 3, 6, 7, 10, 11])

    def test_meet(self, paper):
        p, a = paper
        q, t = element_of(p, a, F(1, 4)), element_of(p, a, F(1, 3))
        assert meet(q, t) == pair(p, [6, 7], [2, 3, 6, 7, 10])
        assert meet(q, q) == q
        m = meet(element_of(p, a, 0), element_of(p, a, F(1, 2)))
        assert m == pair(p, [6], [2, 3, 6, 7])

    def test_family(self, paper):
        p, a = paper
        fam = family(p, a, PAPER_GRID)
        assert len(fam) == 4
        for x, y in product(fam, repeat=2):
            assert equal(x, y) == (x is y)
        assert len(family(p, a, [0])) == 1
        e1, e2 = family(p, a, [F(1, 4), F(26, 100)])
        assert not equal(e1, e2)
        # at 26/100 the upper cap 74/100 falls below E11's degree 3/4
        assert E(p, 11) <= e1.upper and E(p, 11).isdisjoint(e2.upper)
        assert e1.lower == e2.lower

    def test_closure_of_two(self, paper):
        p, a = paper
        q, t = element_of(p, a, F(1, 4)), element_of(p, a, F(1, 3))
        c = closure([q, t])
        assert len(c) == 4
        assert {e.key for e in c} == {q.key, t.key, join(q, t).key, meet(q, t).key}
        assert closure([q]) == [q]

    def test_closure_of_paper_family(self, paper):
        p, a = paper
        blocks = label_blocks(p)
        pairs = set()
        for b, g in product(PAPER_GRID, repeat=2):
            lo, up = brute_vprsve(blocks, set(a), b, g)
            pairs.add((frozenset(lo), frozenset(up)))
        c = closure(family(p, a, PAPER_GRID))
        assert len(pairs) == 12
        assert {(frozenset(e.lower), frozenset(e.upper)) for e in c} == pairs

    def test_laws_on_paper_closure(self, paper):
        p, a = paper
        fam = family(p, a, PAPER_GRID)
        report = check_laws(closure(fam))
        assert report.all_hold and report.closed
        assert report.element_count == 12
        assert report.checked_triples == 12 ** 3
        raw = check_laws(fam)
        assert raw.all_hold
        assert not raw.closed and raw.escape is not None

    def test_chain_report(self, paper):
        p, a = paper
        rep = chain_report(p, a, PAPER_GRID)
        assert rep.boundary_sizes == [16, 12, 5, 0]
        assert rep.lower_sizes == [2, 6, 9, 11]
        assert rep.upper_sizes == [18, 18, 14, 11]
        assert rep.negative_sizes == [7, 7, 11, 14]
        assert chain_report(p, a, [0]).boundary_sizes == [16]


class TestGrid:
    def test_parse(self):
        assert parse_grid("0, 1/4,1/3 ,1/2") == (0, F(1, 4), F(1, 3), F(1, 2))
        assert parse_grid("1/2,0,0") == (0, F(1, 2))

    @pytest.mark.parametrize("text, err", [
        ("0,,1/2", InvalidGrid), ("", InvalidGrid), ("0,3/4", PrecisionOutOfRange),
    ])
    def test_bad(self, text, err):
        with pytest.raises(err):
            parse_grid(text)

    def test_family_rejects_out_of_range(self, paper):
        with pytest.raises(PrecisionOutOfRange):
            family(*paper, [0, F(2, 3)])

    def test_make_grid_empty(self):
        with pytest.raises(InvalidGrid):
            make_grid([])


class TestErrors:
    def test_universe_mismatch(self, paper):
        p, a = paper
        x = element_of(p, a, 0)
        u = make_universe("ab")
        y = LatticeElement(u.empty(), u.full())
        for op in (join, meet, leq, equal):
            with pytest.raises(UniverseMismatch):
                op(x, y)
        with pytest.raises(UniverseMismatch):
            closure([x, y])

    def test_lower_must_sit_in_upper(self):
        u = make_universe("ab")
        with pytest.raises(ValueError):
            LatticeElement(u.full(), u.empty())

    def test_counterexample_reported(self, paper, monkeypatch):
        p, a = paper
        elems = closure(family(p, a, PAPER_GRID))
        monkeypatch.setattr(lattice_mod, "join", lambda x, y: x)
        report = lattice_mod.check_laws(elems)
        assert not report.laws["commutativity"].holds
        ce = report.laws["commutativity"].counterexample
        assert len(ce["operands"]) == 2 and ce["lhs"] != ce["rhs"]
        assert report.laws["idempotence"].holds
        assert not report.all_hold


def random_closure(rng, max_size=10):
    p, x = random_instance(rng, max_size)
    grid = [0, *thresholds(p, x).critical]
    return p, x, grid, closure(family(p, x, grid))


class TestRandomised:
    def test_laws_on_random_closures(self):
        rng = random.Random(20261018)
        for _ in range(50):
            _, _, _, elems = random_closure(rng)
            report = check_laws(elems)
            assert report.all_hold and report.closed

    @settings(max_examples=300)
    @given(instances(), precisions(), precisions())
    def test_normal_forms(self, inst, bi, bj):
        p, x = inst
        if bi > bj:
            bi, bj = bj, bi
        ei, ej = element_of(p, x, bi), element_of(p, x, bj)
        ri, rj = vprs(p, x, bi), vprs(p, x, bj)
        assert join(ei, ej).key == (rj.lower.bits, ri.upper.bits)
        assert meet(ei, ej).key == (ri.lower.bits, rj.upper.bits)

    @settings(max_examples=50)
    @given(instances(max_size=8))
    def test_closure_is_variable_error_family(self, inst):
        p, x = inst
        grid = [0, *thresholds(p, x).critical]
        assert {e.key for e in closure(family(p, x, grid))} == \
            {e.key for e in vprsve_family(p, x, grid)}

    def test_leq_is_partial_order_and_ops_are_bounds(self):
        rng = random.Random(7)
        for _ in range(15):
            _, _, _, elems = random_closure(rng, 8)
            for a, b in product(elems, repeat=2):
                assert leq(a, a)
                if leq(a, b) and leq(b, a):
                    assert equal(a, b)
                j, m = join(a, b), meet(a, b)
                assert leq(a, j) and leq(b, j) and leq(m, a) and leq(m, b)
                for c in elems:
                    if leq(a, c) and leq(b, c):
                        assert leq(j, c)
                    if leq(c, a) and leq(c, b):
                        assert leq(c, m)
                    if leq(a, b) and leq(b, c):
                        assert leq(a, c)

    def test_no_chain_violations(self):
        rng = random.Random(99)
        for _ in range(1000):
            p, x = random_instance(rng, 10)
            grid = sorted({0, F(1, 2), *thresholds(p, x).critical,
                           *(F(rng.randint(0, 50), 100) for _ in range(3))})
            chain_report(p, x, grid)

    def test_chain_violation_raised_on_broken_vprs(self, paper, monkeypatch):
        p, a = paper
        real = lattice_mod.vprs

        def backwards(partition, target, beta, **kw):
            return real(partition, target, F(1, 2) - beta, **kw)

        monkeypatch.setattr(lattice_mod, "vprs", backwards)
        with pytest.raises(ChainViolation):
            chain_report(p, a, PAPER_GRID)
