import itertools

import pytest
from hypothesis import given, settings

from posetfix import (
    AscentPolicy,
    Correspondence,
    FinitePoset,
    GenConfig,
    check_finite_no_gap,
    construct_union_S,
    corrected_proof_trace,
    enumerate_original_S,
    fixed_points,
    random_seeded_instance,
    smithson_ascent,
)
from posetfix.errors import InvariantError, SeedNotExpansive, StuckError, TooLarge
from posetfix.fixpoint import in_original_S, in_redefined_S
from posetfix.symbolic import finite_grid

from conftest import posets


def subsets(n):
    for bits in range(1 << n):
        yield frozenset(x for x in range(n) if bits >> x & 1)


def brute_original_maximal(p, F, e):
    family = [Y for Y in subsets(len(p)) if in_original_S(p, F, e, Y)]
    return sorted((Y for Y in family if not any(Y < Z for Z in family)), key=sorted)


def successor():
    p = FinitePoset.chain(4)
    return p, Correspondence.from_function([1, 2, 3, 3])


class TestUnion:
    def test_identity(self, dia):
        assert construct_union_S(dia, Correspondence.identity(4), 2) == set(range(4))

    def test_grid_is_the_maximum_of_the_family(self):
        p, F, e = finite_grid(4)
        X0 = construct_union_S(p, F, e)
        family = [Y for Y in subsets(len(p)) if in_redefined_S(p, F, e, Y)]
        assert X0 in family
        assert all(Y <= X0 for Y in family)
        assert frozenset().union(*family) == X0

    def test_constant_top(self, dia):
        F = Correspondence.from_function([dia.index("M")] * 4)
        assert construct_union_S(dia, F, dia.index("a")) == set(range(4))

    def test_seed_not_expansive(self, dia):
        F = Correspondence.from_function([0] * 4)
        with pytest.raises(SeedNotExpansive):
            construct_union_S(dia, F, dia.index("M"))


class TestAscent:
    def test_already_fixed(self, dia):
        t = smithson_ascent(dia, Correspondence.identity(4), 1)
        assert t.ascent_steps == () and t.result == 1

    def test_grid_stops_at_m(self):
        p, F, e = finite_grid(4)
        t = smithson_ascent(p, F, e)
        assert p.label(t.result) == "m" and t.ascent_steps == ()

    def test_successor(self):
        p, F = successor()
        t = smithson_ascent(p, F, 0, AscentPolicy.MIN_INDEX)
        assert t.ascent_steps == ((0, 1), (1, 2), (2, 3))
        assert t.result == 3 and fixed_points(p, F) == {3}

    def test_max_policy_jumps(self):
        p = FinitePoset.chain(4)
        F = Correspondence((frozenset([1, 3]), frozenset([2]), frozenset([3]), frozenset([3])))
        assert smithson_ascent(p, F, 0, "max").ascent_steps == ((0, 3),)
        assert smithson_ascent(p, F, 0, "min").ascent_steps == ((0, 1), (1, 2), (2, 3))

    def test_stuck_reports_condition_I(self):
        p = FinitePoset.chain(2)
        F = Correspondence.from_function([1, 0])
        with pytest.raises(StuckError) as exc:
            smithson_ascent(p, F, 0)
        assert exc.value.x == 1
        assert "condition I fails" in exc.value.diagnostic


class TestCorrectedTrace:
    def test_diamond_identity(self, dia):
        t = corrected_proof_trace(dia, Correspondence.identity(4), dia.index("m"))
        # the greedy chain through m ends at M, which is fixed
        assert t.result == dia.index("M")
        assert t.result in fixed_points(dia, Correspondence.identity(4))

    def test_grid_reaches_M(self):
        p, F, e = finite_grid(4)
        t = corrected_proof_trace(p, F, e)
        assert p.label(t.result) == "M"
        assert t.chain == {p.index(x) for x in ("m", "(1/4, 1)", "(1/2, 1)", "(3/4, 1)", "M")}
        assert t.ascent_steps == ()

    def test_trace_roundtrip_and_tamper(self):
        p, F = successor()
        t = corrected_proof_trace(p, F, 0)
        t.verify(p, F)
        assert t.to_dict(p)["result"] == "3"
        assert "fixed point: 3 in F(3)" in t.format(p)
        from dataclasses import replace
        with pytest.raises(InvariantError):
            replace(t, result=2).verify(p, F)
        with pytest.raises(InvariantError):
            replace(t, X0=frozenset([0, 3])).verify(p, F)

    def test_stuck_when_condition_I_fails(self):
        # x0 = 1 is expansive through 2, but 2 is not
        p = FinitePoset.chain(3)
        F = Correspondence((frozenset([1]), frozenset([1, 2]), frozenset([0])))
        with pytest.raises(StuckError):
            corrected_proof_trace(p, F, 0, "max")


class TestOriginalFamily:
    def test_identity_least(self, dia):
        assert enumerate_original_S(dia, Correspondence.identity(4), 0) == [frozenset(range(4))]

    def test_single(self):
        p = FinitePoset.chain(1)
        assert enumerate_original_S(p, Correspondence.identity(1), 0) == [{0}]

    def test_grid_matches_brute_force(self):
        p, F, e = finite_grid(4)
        assert enumerate_original_S(p, F, e) == brute_original_maximal(p, F, e)

    def test_too_large(self):
        p = FinitePoset.chain(20)
        with pytest.raises(TooLarge):
            enumerate_original_S(p, Correspondence.identity(20), 0)

    def test_no_gap_examples(self, dia):
        assert check_finite_no_gap(dia, Correspondence.identity(4), 0) is None
        for den in (4, 8):
            assert check_finite_no_gap(*finite_grid(den)) is None


@settings(max_examples=200, deadline=None)
@given(posets(max_n=7))
def test_original_family_matches_brute_force(p):
    F = Correspondence(tuple(frozenset([x, (x * 3 + 1) % len(p)]) for x in range(len(p))))
    for e in range(len(p)):
        if not F.masks[e] & p.up[e]:
            continue
        assert enumerate_original_S(p, F, e) == brute_original_maximal(p, F, e)
        assert check_finite_no_gap(p, F, e) is None


@pytest.mark.parametrize("seed", range(150))
def test_all_policies_reach_fixed_points(seed):
    cfg = GenConfig(n=1 + seed % 9, edge_density=(seed % 5) / 4, selectors=1 + seed % 3, seed=seed)
    p, F, e = random_seeded_instance(cfg)
    fixed = fixed_points(p, F)
    for policy in AscentPolicy:
        for route in (smithson_ascent, corrected_proof_trace):
            t = route(p, F, e, policy)
            assert t.result in fixed
            t.verify(p, F)
    assert len(smithson_ascent(p, F, e).ascent_steps) < p.height()
