"""Certified fixed points for correspondences satisfying condition I.

Two routes are provided:

* :func:`smithson_ascent` walks upward from the seed, each time moving to a
  strictly larger image point, until it reaches a point of ``F(x)``.
* :func:`corrected_proof_trace` replays the three-step existence argument:
  take the largest family of expansive sets (no convexity clause), pick a
  maximal chain in it, and show that the chain's supremum is fixed.

Both return a :class:`ProofTrace` whose invariants can be re-checked with
:meth:`ProofTrace.verify`.

The module also enumerates the *original* family, which adds an order
convexity clause, to certify that the supremum of a maximal chain always
stays inside a maximal member when the poset is finite.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator

from .correspondence import Correspondence, expansive_set
from .errors import InvariantError, SeedNotExpansive, StuckError, TooLarge
from .poset import ElementSet, FinitePoset, members, to_mask

DEFAULT_N_LIMIT = 16  # 2**16 candidate subsets filter in well under a second


class AscentPolicy(str, enum.Enum):
    """How to choose among several admissible ``z >= x`` in ``F(x)``."""

    MIN_INDEX = "min-index"
    MIN_ELEMENT = "min"
    MAX_ELEMENT = "max"

    def choose(self, p: FinitePoset, candidates: int) -> int:
        if not candidates:
            raise ValueError("no candidates to choose from")
        if self is AscentPolicy.MIN_INDEX:
            return members(candidates)[0]
        if self is AscentPolicy.MIN_ELEMENT:
            return p.minimal_elements(members(candidates))[0]
        return p.maximal_elements(members(candidates))[0]


@dataclass(frozen=True)
class ProofTrace:
    """Replayable certificate that ``result`` is a fixed point.

    ``chain`` is the maximal chain ``C`` of ``X0`` for the ``"corrected"``
    method, and the visited path for the ``"ascent"`` method. ``g0`` is kept
    as sorted ``(x, g0(x))`` pairs.
    """

    method: str
    seed: int
    policy: AscentPolicy
    X0: ElementSet
    chain: ElementSet
    x0: int
    C0: ElementSet
    g0: tuple[tuple[int, int], ...]
    y0: int
    ybar0: int
    ascent_steps: tuple[tuple[int, int], ...]
    result: int

    def verify(self, p: FinitePoset, F: Correspondence) -> None:
        """Re-check every invariant; raise :class:`InvariantError` on failure."""

        def need(ok: bool, what: str) -> None:
            if not ok:
                raise InvariantError(what)

        expansive = expansive_set(p, F)
        need(self.seed in self.X0, "seed is not in X0")
        need(self.X0 <= expansive, "X0 has a non-expansive member")
        need(self.X0 == expansive, "X0 is not the union of the family")
        need(bool(self.chain) and self.chain <= self.X0, "C is empty or leaves X0")
        need(p.is_chain(self.chain), "C is not a chain")
        if self.method == "corrected":
            need(p.is_maximal_chain(self.X0, self.chain), "C is not maximal in X0")
            need(self.seed in self.chain, "C does not contain the seed")
        need(p.sup(self.chain) == self.x0, "x0 is not sup C")
        g0 = dict(self.g0)
        need(set(g0) == set(self.C0) and bool(self.C0), "g0 is not defined on C0")
        need(self.C0 <= self.chain, "C0 is not a subset of C")
        need(p.is_isotone(self.C0, g0), "g0 is not isotone")
        for x, gx in g0.items():
            need(gx in F(x) and p.leq(x, gx), f"g0({x}) is not an expansive choice")
        need(p.sup(self.C0) == self.x0, "x0 is not sup C0")
        need(self.y0 in F(self.x0), "y0 is not in F(x0)")
        need(all(p.leq(gx, self.y0) for gx in g0.values()), "y0 does not dominate g0")
        need(p.leq(self.x0, self.y0), "y0 is not >= x0")
        need(self.ybar0 in F(self.y0) and p.leq(self.y0, self.ybar0), "ybar0 is not valid")
        need(self.y0 in self.X0, "y0 is not in X0")
        x = self.x0 if self.method == "corrected" else self.seed
        for step_from, step_to in self.ascent_steps:
            need(step_from == x, "ascent steps are not contiguous")
            need(step_to in F(step_from), "ascent step leaves F(x)")
            need(p.lt(step_from, step_to), "ascent step is not strict")
            need(step_to in self.X0, "ascent step leaves X0")
            x = step_to
        need(x == self.result, "ascent does not end at the result")
        need(self.result in F(self.result), "result is not a fixed point")
        need(p.leq(self.seed, self.result), "result is not >= seed")

    def to_dict(self, p: FinitePoset) -> dict:
        lab = p.labels

        def names(S):
            return [lab[x] for x in sorted(S)]

        return {
            "method": self.method,
            "seed": lab[self.seed],
            "policy": self.policy.value,
            "X0": names(self.X0),
            "C": names(self.chain),
            "x0": lab[self.x0],
            "C0": names(self.C0),
            "g0": {lab[x]: lab[y] for x, y in self.g0},
            "y0": lab[self.y0],
            "ybar0": lab[self.ybar0],
            "ascent_steps": [[lab[a], lab[b]] for a, b in self.ascent_steps],
            "result": lab[self.result],
        }

    def format(self, p: FinitePoset) -> str:
        """Human-readable report in the ``x >= y`` orientation."""
        d = self.to_dict(p)
        join = ", ".join
        lines = [
            f"method: {d['method']} (policy {d['policy']})",
            f"seed e = {d['seed']}",
            f"X0 = union of the family = {{{join(d['X0'])}}}",
            f"C = {{{join(d['C'])}}}",
            f"x0 = sup C = {d['x0']}",
            f"C0 = {{{join(d['C0'])}}}, "
            + join(f"g0({x}) = {y} >= {x}" for x, y in d["g0"].items()),
            f"y0 = {d['y0']} in F({d['x0']}), y0 >= x0",
            f"ybar0 = {d['ybar0']} in F({d['y0']}), ybar0 >= y0",
        ]
        if d["ascent_steps"]:
            lines += [f"step: {b} in F({a}), {b} >= {a}" for a, b in d["ascent_steps"]]
        else:
            lines.append("no ascent steps")
        lines.append(f"fixed point: {d['result']} in F({d['result']})")
        return "\n".join(lines)


# -- the redefined family ---------------------------------------------------


def construct_union_S(p: FinitePoset, F: Correspondence, e: int) -> ElementSet:
    """Union of every ``Y`` with ``e in Y`` and every member expansive.

    A single pass over the elements: the union is the expansive set itself,
    which contains ``e`` and is therefore the maximum of the family.
    """
    X0 = expansive_set(p, F)
    if e not in X0:
        raise SeedNotExpansive(e)
    return X0


def in_redefined_S(p: FinitePoset, F: Correspondence, e: int, Y) -> bool:
    Y = ElementSet(Y)
    return e in Y and all(F.masks[x] & p.up[x] for x in Y)


def in_original_S(p: FinitePoset, F: Correspondence, e: int, Y) -> bool:
    mask = to_mask(Y)
    if not mask >> e & 1:
        return False
    for x in members(mask):
        if not F.masks[x] & p.up[x]:
            return False
        if p.up[e] & p.down[x] & ~mask:
            return False
    return True


def _ascent_candidates(p: FinitePoset, F: Correspondence, x: int) -> int:
    return F.masks[x] & p.up[x]


def _stuck(p: FinitePoset, F: Correspondence, x: int, came_from: int | None) -> StuckError:
    lab = p.labels
    msg = f"no z in F({lab[x]}) with z >= {lab[x]}"
    if came_from is not None:
        msg += (
            f"; condition I fails at x1 = {lab[x]} >= x2 = {lab[came_from]} "
            f"with y2 = {lab[x]} in F({lab[came_from]})"
        )
    return StuckError(x, msg)


def smithson_ascent(
    p: FinitePoset,
    F: Correspondence,
    e: int,
    policy: AscentPolicy | str = AscentPolicy.MIN_INDEX,
) -> ProofTrace:
    """Strict ascent ``e < z1 < z2 < ...`` through image points until fixed.

    Each move goes from ``x`` to some ``z`` in ``F(x)`` with ``z > x``.
    Condition I applied to ``z >= x`` and ``z`` in ``F(x)`` keeps ``z``
    expansive, so the walk can only stop at a fixed point; a
    :class:`StuckError` therefore means condition I is broken.
    """
    policy = AscentPolicy(policy)
    X0 = construct_union_S(p, F, e)
    x, came_from = e, None
    path = [e]
    steps = []
    while True:
        candidates = _ascent_candidates(p, F, x)
        if not candidates:
            raise _stuck(p, F, x, came_from)
        if x in F(x):
            break
        z = policy.choose(p, candidates)
        steps.append((x, z))
        path.append(z)
        x, came_from = z, x
    trace = ProofTrace(
        method="ascent",
        seed=e,
        policy=policy,
        X0=X0,
        chain=ElementSet(path),
        x0=x,
        C0=ElementSet([x]),
        g0=((x, x),),
        y0=x,
        ybar0=x,
        ascent_steps=tuple(steps),
        result=x,
    )
    trace.verify(p, F)
    return trace


def corrected_proof_trace(
    p: FinitePoset,
    F: Correspondence,
    e: int,
    policy: AscentPolicy | str = AscentPolicy.MIN_INDEX,
) -> ProofTrace:
    """Replay the three-step argument and return its certificate.

    1. ``X0`` is the union of all expansive sets containing ``e``; ``C`` is
       the greedy maximal chain of ``X0`` through ``e``; ``x0 = sup C``.
    2. ``C0 = {x0}`` with ``g0(x0)`` an expansive witness gives
       ``x0 = sup C0``; condition III yields ``y0`` in ``F(x0)`` above
       ``g0(x0) >= x0``, so ``x0`` belongs to ``X0``.
    3. Condition I gives ``ybar0`` in ``F(y0)`` with ``ybar0 >= y0``, so
       ``y0`` is in ``X0``; maximality of ``C`` puts ``y0`` in ``C``, hence
       ``y0 <= x0`` and ``x0 = y0`` is fixed.
    """
    policy = AscentPolicy(policy)
    lab = p.labels
    X0 = construct_union_S(p, F, e)
    chain = p.extend_to_maximal_chain(X0, [e])
    x0 = p.sup(chain)
    if x0 is None or x0 not in chain:
        raise InvariantError("a finite chain must contain its supremum")

    # Step 2
    if x0 not in X0:
        raise InvariantError(f"{lab[x0]} = sup C is not in X0")
    g0_value = policy.choose(p, _ascent_candidates(p, F, x0))
    C0 = ElementSet([x0])
    if p.sup(C0) != x0:
        raise InvariantError("x0 is not sup C0")
    y0_candidates = F.masks[x0] & p.up[g0_value]
    if not y0_candidates:
        raise InvariantError(f"no y0 in F({lab[x0]}) dominates g0")
    y0 = policy.choose(p, y0_candidates)
    if not p.leq(x0, y0):
        raise InvariantError("y0 >= g0(x0) >= x0 failed")

    # Step 3
    ybar_candidates = _ascent_candidates(p, F, y0)
    if not ybar_candidates:
        raise _stuck(p, F, y0, x0)
    ybar0 = policy.choose(p, ybar_candidates)
    if y0 not in X0:
        raise InvariantError(f"{lab[y0]} is expansive but missing from X0")
    if y0 not in chain:
        raise InvariantError(f"C is not maximal: {lab[y0]} >= sup C is missing")
    if y0 != x0:
        raise InvariantError(f"sup C = {lab[x0]} >= {lab[y0]} >= {lab[x0]} but they differ")

    trace = ProofTrace(
        method="corrected",
        seed=e,
        policy=policy,
        X0=X0,
        chain=chain,
        x0=x0,
        C0=C0,
        g0=((x0, g0_value),),
        y0=y0,
        ybar0=ybar0,
        ascent_steps=(),
        result=x0,
    )
    trace.verify(p, F)
    return trace


# -- the original family, with the convexity clause ----------------------------


def original_S_members(
    p: FinitePoset, F: Correspondence, e: int, n_limit: int = DEFAULT_N_LIMIT
) -> Iterator[ElementSet]:
    """Every ``Y`` with ``e in Y``, ``x in Y, x >= z >= e => z in Y``, and
    every member expansive."""
    if len(p) > n_limit:
        raise TooLarge(f"{len(p)} elements exceeds the subset limit {n_limit}")
    expansive = 0
    for x in range(len(p)):
        if F.masks[x] & p.up[x]:
            expansive |= 1 << x
    if not expansive >> e & 1:
        return
    ebit = 1 << e
    intervals = [p.up[e] & p.down[x] for x in range(len(p))]
    rest = members(expansive & ~ebit)
    for bits in range(1 << len(rest)):
        Y = ebit
        for i, x in enumerate(rest):
            if bits >> i & 1:
                Y |= 1 << x
        if all(intervals[x] & ~Y == 0 for x in members(Y)):
            yield ElementSet(members(Y))


def enumerate_original_S(
    p: FinitePoset, F: Correspondence, e: int, n_limit: int = DEFAULT_N_LIMIT
) -> list[ElementSet]:
    """Inclusion-maximal members of the original (convex) family.

    A member is maximal iff no single expansive element can be added: if
    ``Y`` is strictly inside another member ``Y'``, a minimal element of
    ``Y' - Y`` can be added to ``Y`` alone without breaking convexity.
    """
    found = list(original_S_members(p, F, e, n_limit))
    expansive = [x for x in range(len(p)) if F.masks[x] & p.up[x]]
    maximal = []
    for Y in found:
        mask = to_mask(Y)
        extendable = any(
            p.up[e] & p.down[x] & ~(mask | 1 << x) == 0
            for x in expansive
            if not mask >> x & 1
        )
        if not extendable:
            maximal.append(Y)
    return sorted(maximal, key=sorted)


@dataclass(frozen=True)
class GapWitness:
    """A maximal ``Y`` and maximal chain ``C`` in it with ``sup C`` outside ``Y``."""

    Y: ElementSet
    chain: ElementSet
    sup: int | None


def check_finite_no_gap(
    p: FinitePoset, F: Correspondence, e: int, n_limit: int = DEFAULT_N_LIMIT
) -> GapWitness | None:
    """Confirm ``sup C`` lies in ``Y`` for every maximal ``Y`` and maximal chain ``C``.

    Returns ``None`` (pass) or the first gap found.
    """
    if e not in expansive_set(p, F):
        raise SeedNotExpansive(e)
    for Y in enumerate_original_S(p, F, e, n_limit):
        for chain in p.maximal_chains(Y):
            s = p.sup(chain)
            if s is None or s not in Y:
                return GapWitness(Y, chain, s)
    return None
