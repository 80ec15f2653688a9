"""Property suites over generated and exhaustively enumerated instances."""

from __future__ import annotations

import hashlib
import itertools
import json
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .correspondence import (
    Correspondence,
    check_condition_I,
    check_condition_III,
    find_seed,
    fixed_points,
)
from .errors import InvariantError, StuckError
from .fixpoint import AscentPolicy, check_finite_no_gap, corrected_proof_trace, smithson_ascent
from .generate import GenConfig, mutate_drop_image, random_seeded_instance
from .instance import InstanceSpec
from .poset import FinitePoset, members
from .symbolic import finite_grid

DENSITIES = (Fraction(0), Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(1))


@dataclass
class SuiteReport:
    name: str
    instances: int = 0
    failures: list[str] = field(default_factory=list)
    counters: dict[str, int] = field(default_factory=dict)
    _digest: "hashlib._Hash" = field(default_factory=hashlib.sha256, repr=False)

    def fail(self, message: str) -> None:
        self.failures.append(message)

    def count(self, key: str, k: int = 1) -> None:
        self.counters[key] = self.counters.get(key, 0) + k

    def absorb(self, obj) -> None:
        self._digest.update(json.dumps(obj, sort_keys=True).encode())

    @property
    def digest(self) -> str:
        return self._digest.hexdigest()

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary_line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = " ".join(f"{k}={v}" for k, v in sorted(self.counters.items()))
        return (
            f"{status} {self.name}: {self.instances} instances, "
            f"{len(self.failures)} failures {extra}".rstrip()
        )


def random_configs(count: int, seed: int, max_n: int) -> list[GenConfig]:
    """Mixed sizes, densities and selector counts, reproducible from ``seed``."""
    rng = random.Random(seed)
    return [
        GenConfig(
            n=rng.randint(1, max_n),
            edge_density=rng.choice(DENSITIES),
            selectors=rng.choice((1, 2, 3)),
            seed=rng.getrandbits(64),
        )
        for _ in range(count)
    ]


def certify(
    report: SuiteReport,
    tag: str,
    p: FinitePoset,
    F: Correspondence,
    e: int,
    policies: tuple[AscentPolicy, ...] = tuple(AscentPolicy),
) -> None:
    """Run both fixed-point routes and compare with the brute-force scan."""
    fixed = fixed_points(p, F)
    if not fixed:
        report.fail(f"{tag}: no fixed point although the hypotheses hold")
        return
    height = p.height()
    for policy in policies:
        try:
            trace = smithson_ascent(p, F, e, policy)
        except (StuckError, InvariantError) as exc:
            report.fail(f"{tag}: ascent ({policy.value}) raised {exc!r}")
            continue
        if trace.result not in fixed:
            report.fail(f"{tag}: ascent ({policy.value}) result is not a fixed point")
        if len(trace.ascent_steps) > height - 1:
            report.fail(f"{tag}: ascent longer than the height allows")
        report.absorb(trace.to_dict(p))
        report.count("certified")
    try:
        trace = corrected_proof_trace(p, F, e)
    except (StuckError, InvariantError) as exc:
        report.fail(f"{tag}: corrected trace raised {exc!r}")
        return
    if trace.result not in fixed:
        report.fail(f"{tag}: corrected trace result is not a fixed point")
    report.absorb(trace.to_dict(p))
    report.count("certified")


def run_theorem_suite(instances: int = 1000, seed: int = 1, max_n: int = 11) -> SuiteReport:
    """Generated instances satisfy the hypotheses and every route finds a fixed point.

    ``max_n`` bounds the generated elements; an adjoined top may add one.
    """
    report = SuiteReport("theorem")
    for i, cfg in enumerate(random_configs(instances, seed, max_n)):
        p, F, e = random_seeded_instance(cfg)
        tag = f"instance {i} (seed {cfg.seed})"
        report.instances += 1
        report.absorb(InstanceSpec.from_instance(p, F, e).to_json_obj())
        try:
            FinitePoset.from_leq(p.labels, p.leq)
        except Exception as exc:  # noqa: BLE001 - any axiom failure is a suite failure
            report.fail(f"{tag}: generated relation is not a partial order: {exc}")
            continue
        violation = check_condition_I(p, F)
        if violation is not None:
            report.fail(f"{tag}: condition I fails: {violation.describe(p)}")
            continue
        if find_seed(p, F) is None or not F.masks[e] & p.up[e]:
            report.fail(f"{tag}: no seed")
            continue
        certify(report, tag, p, F, e)

        mutant = mutate_drop_image(F, cfg.seed)
        if mutant is None:
            continue
        witness = check_condition_I(p, mutant)
        if witness is not None:
            if not witness.replay(p, mutant):
                report.fail(f"{tag}: mutant witness does not replay")
            report.count("mutants_caught")
        else:
            report.count("mutants_still_valid")
            if find_seed(p, mutant) is not None and not fixed_points(p, mutant):
                report.fail(f"{tag}: valid mutant without a fixed point")
    return report


def all_posets(n: int) -> list[FinitePoset]:
    """One poset per isomorphism class on ``n`` elements.

    Every finite poset has a linear extension, so each class contains a
    naturally labelled member (``i < j`` whenever ``x_i < x_j``); these
    are enumerated and reduced to a canonical form over permutations.
    """
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    perms = list(itertools.permutations(range(n)))
    seen = set()
    out = []
    for bits in range(1 << len(pairs)):
        up = [1 << i for i in range(n)]
        for k, (i, j) in enumerate(pairs):
            if bits >> k & 1:
                up[i] |= 1 << j
        if any(up[j] & ~up[i] for i in range(n) for j in members(up[i])):
            continue  # not transitive
        key = min(
            tuple(
                sorted(
                    (perm[i], perm[j]) for i in range(n) for j in members(up[i]) if i != j
                )
            )
            for perm in perms
        )
        if key in seen:
            continue
        seen.add(key)
        out.append(FinitePoset([f"x{i}" for i in range(n)], up))
    return out


def all_correspondences(n: int):
    """Every nonempty-valued correspondence on ``n`` elements."""
    images = [frozenset(members(mask)) for mask in range(1, 1 << n)]
    for choice in itertools.product(images, repeat=n):
        yield Correspondence(choice)


def run_condition_III_suite(
    max_exhaustive_n: int = 4, random_instances: int = 500, random_max_n: int = 7, seed: int = 3
) -> SuiteReport:
    """Condition III holds on every finite instance, checked exhaustively."""
    report = SuiteReport("condition-III")
    for n in range(1, max_exhaustive_n + 1):
        for pi, p in enumerate(all_posets(n)):
            for fi, F in enumerate(all_correspondences(n)):
                report.instances += 1
                tag = f"n={n} poset #{pi} correspondence #{fi}"
                _check_III(report, tag, p, F, (AscentPolicy.MIN_INDEX,))
    for i, cfg in enumerate(random_configs(random_instances, seed, random_max_n - 1)):
        p, F, e = random_seeded_instance(cfg)
        report.instances += 1
        report.absorb(InstanceSpec.from_instance(p, F, e).to_json_obj())
        _check_III(report, f"random {i} (seed {cfg.seed})", p, F)
    return report


def _check_III(
    report: SuiteReport,
    tag: str,
    p: FinitePoset,
    F: Correspondence,
    policies: tuple[AscentPolicy, ...] = tuple(AscentPolicy),
) -> None:
    witness = check_condition_III(p, F)
    if witness is not None:
        report.fail(f"{tag}: condition III fails: {witness.describe(p)}")
        return
    if check_condition_I(p, F) is None:
        seed = find_seed(p, F)
        if seed is not None:
            report.count("hypotheses_hold")
            certify(report, tag, p, F, seed[0], policies)


def run_no_gap_suite(
    random_instances: int = 500, max_n: int = 14, seed: int = 5, grids: tuple[int, ...] = (4, 8)
) -> SuiteReport:
    """Suprema of maximal chains never leave maximal convex members finitely."""
    report = SuiteReport("finite-no-gap")
    cases = [
        (f"grid 1/{den}", *finite_grid(den)) for den in grids
    ]
    for i, cfg in enumerate(random_configs(random_instances, seed, max_n - 1)):
        cases.append((f"random {i} (seed {cfg.seed})", *random_seeded_instance(cfg)))
    for tag, p, F, e in cases:
        report.instances += 1
        report.absorb(InstanceSpec.from_instance(p, F, e).to_json_obj())
        gap = check_finite_no_gap(p, F, e)
        if gap is not None:
            report.fail(f"{tag}: sup of a maximal chain leaves its member: {gap}")
        if check_condition_I(p, F) is None:
            certify(report, tag, p, F, e)
    return report
