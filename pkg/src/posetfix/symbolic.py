"""Exact model of the two-branch poset ``{M} + (0,1) x {1,2} + {m}``.

``M`` is above everything, ``m`` below everything, and ``(a, i) <= (b, j)``
holds iff ``i == j`` and ``a <= b``. The branch parameters range over the
rationals in ``(0, 1)`` so every comparison is exact. The correspondence is

* ``F(M) = {M}``, ``F(m) = {m}``
* ``F(a, 1) = {(a, 1)}``
* ``F(b, 2) = {m}`` (the seed ``e`` is ``m``)

Infinite chains are handled through :class:`ChainDescriptor`, a finite part
plus at most one interval family on a single branch. Claims about the
structure are verified by class-level case analysis: a statement about a
few elements depends only on their classes (``M``, ``m``, branch 1,
branch 2) and on the order type of their branch parameters, so evaluating
it at representatives of every order type decides it. Seeded random
rationals add a second, purely falsifying layer.
"""

from __future__ import annotations

import enum
import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .correspondence import Correspondence
from .errors import EmptyChain, InvalidDescriptor
from .fixpoint import corrected_proof_trace, smithson_ascent
from .poset import FinitePoset

DEFAULT_SAMPLES = 1000
DEFAULT_SEED = 20240601

# Three values realize every weak order of up to three parameters.
REPRESENTATIVES = (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4))

NOTES = (
    "e = m, as instantiated by e = y = m; F(b, 2) = {m}",
    "branch parameters range over Q intersected with (0, 1); every claim checked is order-theoretic",
)


class Tag(enum.Enum):
    BOTTOM = "m"
    BRANCH = "branch"
    TOP = "M"


class SymElement:
    """``M``, ``m`` or a branch point ``(q, index)`` with ``0 < q < 1``.

    Immutable. The parameter is kept both as a :class:`Fraction` and as a
    reduced integer pair, which the comparisons use directly.
    """

    __slots__ = ("tag", "index", "q", "_num", "_den", "_hash")

    def __init__(self, tag: Tag, index: int = 0, q=0):
        q = Fraction(q)
        if tag is Tag.BRANCH:
            if index not in (1, 2):
                raise ValueError(f"branch index must be 1 or 2, got {index}")
            if not 0 < q < 1:
                raise ValueError(f"branch parameter must lie in (0, 1), got {q}")
        elif index != 0 or q != 0:
            raise ValueError(f"{tag.value} carries no branch data")
        set_ = object.__setattr__
        set_(self, "tag", tag)
        set_(self, "index", index)
        set_(self, "q", q)
        set_(self, "_num", q.numerator)
        set_(self, "_den", q.denominator)
        set_(self, "_hash", hash((tag, index, q.numerator, q.denominator)))

    def __setattr__(self, name, value):
        raise AttributeError("SymElement is immutable")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymElement):
            return NotImplemented
        return (
            self.tag is other.tag
            and self.index == other.index
            and self._num == other._num
            and self._den == other._den
        )

    def __hash__(self) -> int:
        return self._hash

    def __reduce__(self):
        return (SymElement, (self.tag, self.index, self.q))

    @property
    def cls(self) -> str:
        """Class name: ``"M"``, ``"m"``, ``"B1"`` or ``"B2"``."""
        if self.tag is Tag.BRANCH:
            return f"B{self.index}"
        return self.tag.value

    def __str__(self) -> str:
        if self.tag is Tag.BRANCH:
            return f"({self.q}, {self.index})"
        return self.tag.value

    def __repr__(self) -> str:
        return f"SymElement<{self}>"


TOP = SymElement(Tag.TOP)
BOTTOM = SymElement(Tag.BOTTOM)
SEED = BOTTOM


def branch(index: int, q) -> SymElement:
    return SymElement(Tag.BRANCH, index, Fraction(q))


def sym_leq(a: SymElement, b: SymElement) -> bool:
    """``a <= b`` in the two-branch order."""
    if a.tag is Tag.BOTTOM or b.tag is Tag.TOP:
        return True
    if a.tag is Tag.TOP or b.tag is Tag.BOTTOM:
        return False
    return a.index == b.index and a._num * b._den <= b._num * a._den


def _image(x: SymElement) -> SymElement:
    # F is single-valued on this instance.
    if x.tag is Tag.BRANCH and x.index == 2:
        return SEED
    return x


def sym_F(x: SymElement) -> frozenset[SymElement]:
    return frozenset([_image(x)])


def is_expansive(x: SymElement) -> bool:
    return sym_leq(x, _image(x))


# -- chain descriptors --------------------------------------------------------


@dataclass(frozen=True)
class Interval:
    """Rational interval with endpoints in ``[0, 1]``, read inside ``(0, 1)``."""

    lo: Fraction
    hi: Fraction
    lo_closed: bool = False
    hi_closed: bool = False

    def __post_init__(self):
        lo, hi = Fraction(self.lo), Fraction(self.hi)
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)
        if not 0 <= lo <= hi <= 1:
            raise InvalidDescriptor(f"need 0 <= lo <= hi <= 1, got [{lo}, {hi}]")
        if lo == hi and not (self.lo_closed and self.hi_closed and 0 < lo < 1):
            raise InvalidDescriptor("interval meets (0, 1) in the empty set")

    def __contains__(self, q: Fraction) -> bool:
        if not 0 < q < 1:
            return False
        above = self.lo < q or (self.lo_closed and q == self.lo)
        below = q < self.hi or (self.hi_closed and q == self.hi)
        return above and below

    @property
    def attained(self) -> bool:
        """Whether the supremum ``hi`` is a member."""
        return self.hi in self

    def sample(self, rng: random.Random, k: int) -> list[Fraction]:
        if self.lo == self.hi:
            return [self.lo] * k
        out = []
        for _ in range(k):
            den = rng.randint(2, 1 << 20)
            out.append(self.lo + (self.hi - self.lo) * Fraction(rng.randint(1, den - 1), den))
        return out

    def approach_hi(self, steps: int = 24) -> list[Fraction]:
        """Members converging to ``hi`` from below."""
        if self.lo == self.hi:
            return [self.lo]
        width = self.hi - self.lo
        return [self.hi - width / 2**k for k in range(1, steps + 1)]

    def __str__(self) -> str:
        left = "[" if self.lo_closed else "("
        right = "]" if self.hi_closed else ")"
        return f"{left}{self.lo}, {self.hi}{right}"


@dataclass(frozen=True)
class Family:
    """``{(a, index) : a in interval}``."""

    index: int
    interval: Interval

    def __post_init__(self):
        if self.index not in (1, 2):
            raise InvalidDescriptor(f"branch index must be 1 or 2, got {self.index}")

    def __contains__(self, x: SymElement) -> bool:
        return x.tag is Tag.BRANCH and x.index == self.index and x.q in self.interval

    def __str__(self) -> str:
        return f"{self.interval} x {{{self.index}}}"


@dataclass(frozen=True)
class ChainDescriptor:
    """A chain given as optional ``M``/``m``, finitely many branch points
    and at most one interval family, all on one branch."""

    include_M: bool = False
    include_m: bool = False
    finite_part: frozenset[SymElement] = field(default_factory=frozenset)
    family: Family | None = None

    def __post_init__(self):
        finite = frozenset(self.finite_part)
        object.__setattr__(self, "finite_part", finite)
        if any(x.tag is not Tag.BRANCH for x in finite):
            raise InvalidDescriptor("finite_part holds branch elements only; use the flags for M and m")
        indices = {x.index for x in finite}
        if self.family is not None:
            indices.add(self.family.index)
        if len(indices) > 1:
            raise InvalidDescriptor("a chain cannot meet both branches")

    @property
    def branch_index(self) -> int | None:
        for x in self.finite_part:
            return x.index
        return None if self.family is None else self.family.index

    @property
    def is_empty(self) -> bool:
        return not (self.include_M or self.include_m or self.finite_part or self.family)

    def __contains__(self, x: SymElement) -> bool:
        if x.tag is Tag.TOP:
            return self.include_M
        if x.tag is Tag.BOTTOM:
            return self.include_m
        return x in self.finite_part or (self.family is not None and x in self.family)

    def image(self) -> "ChainDescriptor":
        """``F`` applied pointwise; ``F`` is single-valued here."""
        if self.branch_index == 2:
            return ChainDescriptor(self.include_M, True)
        return self

    def sample_members(self, rng: random.Random, k: int, approach: int = 0) -> list[SymElement]:
        """Flags, the finite part, attained endpoints, ``approach`` points
        converging to the supremum, and ``k`` random family members."""
        out = []
        if self.include_m:
            out.append(BOTTOM)
        if self.include_M:
            out.append(TOP)
        out.extend(sorted(self.finite_part, key=lambda x: x.q))
        if self.family is not None:
            i, iv = self.family.index, self.family.interval
            qs = iv.approach_hi(approach) if approach else []
            qs += iv.sample(rng, k)
            if iv.attained:
                qs.append(iv.hi)
            if iv.lo_closed and iv.lo > 0:
                qs.append(iv.lo)
            out.extend(branch(i, q) for q in qs)
        return out

    def endpoints(self) -> list[SymElement]:
        """Family endpoints inside ``(0, 1)``, members or not."""
        if self.family is None:
            return []
        iv = self.family.interval
        return [branch(self.family.index, q) for q in (iv.lo, iv.hi) if 0 < q < 1]

    def __str__(self) -> str:
        parts = []
        if self.include_m:
            parts.append("m")
        parts += [str(x) for x in sorted(self.finite_part, key=lambda x: x.q)]
        if self.family is not None:
            parts.append(str(self.family))
        if self.include_M:
            parts.append("M")
        return "{" + ", ".join(parts) + "}"


def sym_sup(C: ChainDescriptor) -> SymElement:
    """Least upper bound of a described chain.

    ``M`` if present; otherwise a family reaching 1 has only ``M`` above it;
    otherwise the largest branch parameter (attained or not) is the bound;
    ``{m}`` alone has supremum ``m``.
    """
    if not isinstance(C, ChainDescriptor):
        raise InvalidDescriptor(f"expected a ChainDescriptor, got {type(C).__name__}")
    if C.is_empty:
        raise EmptyChain("the supremum of the empty chain is not defined")
    if C.include_M:
        return TOP
    qs = [x.q for x in C.finite_part]
    if C.family is not None:
        if C.family.interval.hi == 1:
            return TOP
        qs.append(C.family.interval.hi)
    if qs:
        return branch(C.branch_index, max(qs))
    return BOTTOM


def is_upper_bound(u: SymElement, C: ChainDescriptor) -> bool:
    """Exact test that ``u`` dominates every member of ``C``."""
    if C.include_M and u.tag is not Tag.TOP:
        return False
    if C.include_m and not sym_leq(BOTTOM, u):
        return False
    if not all(sym_leq(x, u) for x in C.finite_part):
        return False
    if C.family is None:
        return True
    if u.tag is Tag.TOP:
        return True
    if u.tag is Tag.BOTTOM or u.index != C.family.index:
        return False
    return u.q >= C.family.interval.hi


# -- reports ------------------------------------------------------------------


@dataclass(frozen=True)
class CaseResult:
    label: str
    rule: str
    verdict: bool
    samples: int

    def line(self) -> str:
        status = "PASS" if self.verdict else "FAIL"
        return f"{status} {self.label}: {self.rule} [samples={self.samples}]"


@dataclass(frozen=True)
class ClassCaseReport:
    title: str
    cases: tuple[CaseResult, ...]
    notes: tuple[str, ...] = NOTES

    @property
    def passed(self) -> bool:
        return bool(self.cases) and all(c.verdict for c in self.cases)

    @property
    def samples(self) -> int:
        return sum(c.samples for c in self.cases)

    def summary_line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        ok = sum(c.verdict for c in self.cases)
        return f"{status} {self.title}: {ok}/{len(self.cases)} cases [samples={self.samples}]"


CLASSES = ("M", "m", "B1", "B2")


def _representatives(cls: str) -> list[SymElement]:
    if cls == "M":
        return [TOP]
    if cls == "m":
        return [BOTTOM]
    return [branch(int(cls[1]), q) for q in REPRESENTATIVES]


def _random_q(rng: random.Random) -> Fraction:
    # Small denominators make ties between parameters common.
    den = rng.randint(2, 12) if rng.random() < 0.5 else rng.randint(2, 1 << 30)
    return Fraction(rng.randint(1, den - 1), den)


class _Sampler(random.Random):
    """Seeded generator that also draws class members from fixed pools.

    Pools are built once per report, so a confirmation sample costs a few
    index draws and comparisons rather than fresh rational arithmetic.
    """

    def __init__(self, seed: int, pool_size: int = 512):
        super().__init__(seed)
        self._qs = [_random_q(self) for _ in range(pool_size)]
        self._pools = {
            "M": [TOP],
            "m": [BOTTOM],
            "B1": [branch(1, q) for q in self._qs],
            "B2": [branch(2, q) for q in self.sample(self._qs, len(self._qs))],
        }

    def q(self) -> Fraction:
        return self._qs[int(self.random() * len(self._qs))]

    def draw(self, cls: str) -> SymElement:
        pool = self._pools[cls]
        return pool[int(self.random() * len(pool))]


def _decide(
    classes: Sequence[str],
    claim: Callable[..., bool],
    rng: _Sampler,
    samples: int,
) -> tuple[bool, int]:
    """Evaluate ``claim`` on every order type, then on ``samples`` random draws."""
    ok = all(
        claim(*xs) for xs in itertools.product(*(_representatives(c) for c in classes))
    )
    for _ in range(samples):
        ok = claim(*[rng.draw(c) for c in classes]) and ok
    return ok, samples


def _order_rule(a: str, b: str) -> str:
    if "M" in (a, b) or "m" in (a, b):
        return "top/bottom clause"
    if a == b:
        return "rational order on one branch"
    return "branches incomparable"


# -- verifications --------------------------------------------------------------


def verify_poset_axioms(samples: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED) -> ClassCaseReport:
    rng = _Sampler(seed)
    cases = []
    for a in CLASSES:
        ok, n = _decide([a], lambda x: sym_leq(x, x), rng, samples)
        cases.append(CaseResult(f"reflexive({a})", f"{a} >= {a}", ok, n))
    for a, b in itertools.product(CLASSES, repeat=2):
        ok, n = _decide(
            [a, b], lambda x, y: not (sym_leq(x, y) and sym_leq(y, x)) or x == y, rng, samples
        )
        cases.append(CaseResult(f"antisymmetric({a},{b})", _order_rule(a, b), ok, n))
    for a, b, c in itertools.product(CLASSES, repeat=3):
        ok, n = _decide(
            [a, b, c],
            lambda x, y, z: not (sym_leq(y, x) and sym_leq(z, y)) or sym_leq(z, x),
            rng,
            samples,
        )
        rule = f"{_order_rule(a, b)}; {_order_rule(b, c)}"
        cases.append(CaseResult(f"transitive({a},{b},{c})", rule, ok, n))
    return ClassCaseReport("poset-axioms", tuple(cases))


def _condition_I_claim(x1: SymElement, x2: SymElement) -> bool:
    if not sym_leq(x2, x1):
        return True
    return all(any(sym_leq(y2, y1) for y1 in sym_F(x1)) for y2 in sym_F(x2))


def _condition_I_rule(c1: str, c2: str) -> str:
    comparable = any(
        sym_leq(x2, x1)
        for x1 in _representatives(c1)
        for x2 in _representatives(c2)
    )
    if not comparable:
        return f"vacuous: no {c1} is >= a {c2}"
    if c1 == "M":
        return "y1 = M is greatest"
    if c2 == "m":
        return "y2 = m and every y1 >= m"
    if c1 == c2 == "B1":
        return "a >= b gives y1 = (a, 1) >= (b, 1) = y2"
    if c1 == c2 == "B2":
        return "y1 = m = y2"
    return "case analysis"


def verify_condition_I_sym(samples: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED) -> ClassCaseReport:
    rng = _Sampler(seed)
    cases = []
    for c1, c2 in itertools.product(CLASSES, repeat=2):
        ok, n = _decide([c1, c2], _condition_I_claim, rng, samples)
        cases.append(CaseResult(f"condition-I(x1={c1},x2={c2})", _condition_I_rule(c1, c2), ok, n))
    return ClassCaseReport("condition-I", tuple(cases))


# Each random chain descriptor costs about as much as twenty element samples.
DESCRIPTOR_DRAW_RATIO = 20

# Chain shapes on one branch: the kind of branch part and where it tops out.
BRANCH_SHAPES = ("finite", "family-attained", "family-open", "family-to-1")


def _random_descriptor(
    rng: _Sampler, index: int, shape: str, include_m: bool, include_M: bool
) -> ChainDescriptor:
    if shape == "finite":
        points = frozenset(branch(index, rng.q()) for _ in range(rng.randint(1, 4)))
        return ChainDescriptor(include_M, include_m, points)
    a, b = rng.q(), rng.q()
    while a == b:
        b = rng.q()
    lo, hi = min(a, b), max(a, b)
    if rng.random() < 0.5:
        lo = Fraction(0)
    if shape == "family-to-1":
        hi, hi_closed = Fraction(1), rng.random() < 0.5
    else:
        hi_closed = shape == "family-attained"
    interval = Interval(lo, hi, lo_closed=rng.random() < 0.5 and lo > 0, hi_closed=hi_closed)
    below = frozenset(branch(index, lo * q) for q in (Fraction(1, 2),) if lo > 0)
    return ChainDescriptor(include_M, include_m, below, Family(index, interval))


def _condition_III_holds(C: ChainDescriptor, rng: _Sampler, k: int) -> bool:
    """The selection is forced since ``F`` is single-valued; check it is
    isotone on sampled members and that ``F(sup C)`` dominates its image."""
    x0 = sym_sup(C)
    g_image = C.image()
    pts = C.sample_members(rng, k)
    g = [_image(x) for x in pts]
    pairs = list(itertools.combinations(range(len(pts)), 2))
    is_chain = all(sym_leq(pts[i], pts[j]) or sym_leq(pts[j], pts[i]) for i, j in pairs)
    isotone = all(
        (not sym_leq(pts[i], pts[j]) or sym_leq(g[i], g[j]))
        and (not sym_leq(pts[j], pts[i]) or sym_leq(g[j], g[i]))
        for i, j in pairs
    )
    dominated = any(
        is_upper_bound(y0, g_image) and all(sym_leq(gx, y0) for gx in g)
        for y0 in sym_F(x0)
    )
    return isotone and dominated and is_chain


def _sup_is_lub(C: ChainDescriptor, rng: _Sampler, k: int) -> bool:
    """``sym_sup(C)`` bounds sampled members and lies below every sampled
    element that bounds those members together with the family endpoints."""
    s = sym_sup(C)
    pts = C.sample_members(rng, k, approach=8)
    if not is_upper_bound(s, C) or not all(sym_leq(x, s) for x in pts):
        return False
    pts += C.endpoints()
    candidates = [TOP, BOTTOM, s] + [branch(i, rng.q()) for i in (1, 2) for _ in range(k)]
    if s.tag is Tag.BRANCH:
        candidates += [branch(s.index, q) for q in (s.q / 2, (s.q + 1) / 2)]
    for u in candidates:
        bounds_sample = all(sym_leq(x, u) for x in pts)
        if (bounds_sample or is_upper_bound(u, C)) and not sym_leq(s, u):
            return False
    return True


def verify_condition_III_sym(samples: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED) -> ClassCaseReport:
    rng = _Sampler(seed)
    cases = []
    ok, n = _decide(
        ["B1", "B2"], lambda x, y: not sym_leq(x, y) and not sym_leq(y, x), rng, samples
    )
    cases.append(CaseResult("no-mixed-branch-chain", "(a, 1) and (b, 2) are incomparable", ok, n))

    for C in (
        ChainDescriptor(include_m=True),
        ChainDescriptor(include_M=True),
        ChainDescriptor(include_M=True, include_m=True),
    ):
        ok = _condition_III_holds(C, rng, 0)
        y0 = next(iter(sym_F(sym_sup(C))))
        cases.append(CaseResult(f"condition-III{C}", f"sup C = {sym_sup(C)}, y0 = {y0}", ok, 1))

    draws = max(1, samples // DESCRIPTOR_DRAW_RATIO)
    for index, shape, include_m, include_M in itertools.product(
        (1, 2), BRANCH_SHAPES, (False, True), (False, True)
    ):
        ok = True
        for _ in range(draws):
            C = _random_descriptor(rng, index, shape, include_m, include_M)
            ok = _condition_III_holds(C, rng, 2) and ok
        if include_M or shape == "family-to-1":
            rule = "sup C = M, y0 = M dominates every g(x)"
        elif index == 1:
            rule = "sup C = (s, 1), y0 = (s, 1) dominates g = identity"
        else:
            rule = "sup C = (s, 2), y0 = m dominates g = m"
        label = f"condition-III(branch={index},{shape},m={int(include_m)},M={int(include_M)})"
        cases.append(CaseResult(label, rule, ok, draws))

    ok = True
    for _ in range(draws):
        index = rng.choice((1, 2))
        shape = rng.choice(BRANCH_SHAPES)
        C = _random_descriptor(rng, index, shape, rng.random() < 0.5, rng.random() < 0.5)
        ok = _sup_is_lub(C, rng, 2) and ok
    cases.append(CaseResult("sup-rule-is-lub", "sup C bounds C and lies below every bound", ok, draws))
    return ClassCaseReport("condition-III", tuple(cases))


# The maximal member of the original family exhibited for the gap, and the
# union of the redefined family.
X0_ORIGINAL = ChainDescriptor(include_m=True, family=Family(1, Interval(0, 1)))
X0_REDEFINED = ChainDescriptor(include_M=True, include_m=True, family=Family(1, Interval(0, 1)))


def _members_of(classes: Iterable[str], S: ChainDescriptor, rng, samples) -> tuple[bool, int]:
    total_ok, total = True, 0
    for c in classes:
        ok, n = _decide([c], lambda x: x in S, rng, samples)
        total_ok, total = total_ok and ok, total + n
    return total_ok, total


def _non_members_of(classes: Iterable[str], S: ChainDescriptor, rng, samples) -> tuple[bool, int]:
    total_ok, total = True, 0
    for c in classes:
        ok, n = _decide([c], lambda x: x not in S, rng, samples)
        total_ok, total = total_ok and ok, total + n
    return total_ok, total


def verify_original_proof_gap(samples: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED) -> ClassCaseReport:
    """The five claims showing ``sup C`` can leave a maximal convex member."""
    rng = _Sampler(seed)
    X0 = X0_ORIGINAL
    cases = []

    # (a) clauses (1), (3), (2)
    ok1 = SEED in X0
    ok3, n3 = _decide(["m"], is_expansive, rng, samples)
    ok3b, n3b = _decide(["B1"], is_expansive, rng, samples)

    def convex(x, z):
        if x not in X0:
            return True
        return not (sym_leq(z, x) and sym_leq(SEED, z)) or z in X0

    ok2, n2 = True, 0
    for cx, cz in itertools.product(("m", "B1"), CLASSES):
        ok, n = _decide([cx, cz], convex, rng, samples)
        ok2, n2 = ok2 and ok, n2 + n
    okm, nm = _members_of(("m", "B1"), X0, rng, samples)
    cases.append(CaseResult(
        "gap(a) X0 in original S",
        f"X0 = {X0}: m in X0; m and every (a, 1) expansive; x >= z >= m with x in X0 forces z in X0",
        ok1 and ok3 and ok3b and ok2 and okm,
        n3 + n3b + n2 + nm,
    ))

    # (b) maximality: everything outside X0 is M or some (b, 2)
    ok_out, n_out = _non_members_of(("M", "B2"), X0, rng, samples)
    ok_b2, n_b2 = _decide(["B2"], lambda x: not is_expansive(x), rng, samples)
    # Adding M: clause (2) then forces every z with M >= z >= m, i.e. all of X.
    ok_all, n_all = True, 0
    for c in CLASSES:
        ok, n = _decide([c], lambda z: sym_leq(z, TOP) and sym_leq(SEED, z), rng, samples)
        ok_all, n_all = ok_all and ok, n_all + n
    cases.append(CaseResult(
        "gap(b) X0 maximal in original S",
        "adding (b, 2) breaks (3) since m is not >= (b, 2); adding M forces X' = X by (2), "
        "and then any (b, 2) breaks (3)",
        ok_out and ok_b2 and ok_all,
        n_out + n_b2 + n_all,
    ))

    # (c) X0 is a chain, hence its own maximal chain
    ok_c, n_c = True, 0
    for a, b in itertools.product(("m", "B1"), repeat=2):
        ok, n = _decide([a, b], lambda x, y: sym_leq(x, y) or sym_leq(y, x), rng, samples)
        ok_c, n_c = ok_c and ok, n_c + n
    cases.append(CaseResult(
        "gap(c) C = X0 is a maximal chain of X0",
        "m and all (a, 1) are pairwise comparable; nothing of X0 lies outside C",
        ok_c,
        n_c,
    ))

    # (d) sup C = M: no element below M bounds the branch-1 family
    def not_a_bound(u):
        if u.tag is Tag.TOP:
            return True
        if u.tag is Tag.BOTTOM:
            return not is_upper_bound(u, X0)
        witness = branch(1, (u.q + 1) / 2) if u.index == 1 else branch(1, Fraction(1, 2))
        return witness in X0 and not sym_leq(witness, u) and not is_upper_bound(u, X0)

    ok_d, n_d = True, 0
    for c in CLASSES:
        ok, n = _decide([c], not_a_bound, rng, samples)
        ok_d, n_d = ok_d and ok, n_d + n
    ok_d = ok_d and sym_sup(X0) == TOP and _sup_is_lub(X0, rng, 16)
    cases.append(CaseResult(
        "gap(d) x0 = sup C = M",
        "every (a, i) is exceeded by ((a + 1)/2, 1) or incomparable to it; only M bounds C",
        ok_d,
        n_d + samples,
    ))

    # (e)
    cases.append(CaseResult(
        "gap(e) M not in X0",
        "X0 holds only m and branch-1 points",
        TOP not in X0 and sym_sup(X0) not in X0,
        1,
    ))
    return ClassCaseReport("original-proof-gap", tuple(cases))


def verify_corrected_on_counterexample(
    samples: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED
) -> ClassCaseReport:
    """Without the convexity clause the same instance yields fixed points."""
    rng = _Sampler(seed)
    X0 = X0_REDEFINED
    cases = []

    ok_in, n_in = True, 0
    for c in ("M", "m", "B1"):
        ok, n = _decide([c], lambda x: is_expansive(x) and x in X0, rng, samples)
        ok_in, n_in = ok_in and ok, n_in + n
    ok_out, n_out = _decide(["B2"], lambda x: not is_expansive(x) and x not in X0, rng, samples)
    cases.append(CaseResult(
        "corrected: X0 = union of redefined S",
        f"expansive points are m, M and every (a, 1); (b, 2) excluded; X0 = {X0} contains e = m",
        ok_in and ok_out and SEED in X0,
        n_in + n_out,
    ))

    ok_c, n_c = True, 0
    for a, b in itertools.product(("M", "m", "B1"), repeat=2):
        ok, n = _decide([a, b], lambda x, y: sym_leq(x, y) or sym_leq(y, x), rng, samples)
        ok_c, n_c = ok_c and ok, n_c + n
    x0 = sym_sup(X0)
    cases.append(CaseResult(
        "corrected: C = X0 is a maximal chain with sup C = M in X0",
        "m, M and all (a, 1) are pairwise comparable; sup C = M lies in X0",
        ok_c and x0 == TOP and x0 in X0,
        n_c,
    ))

    # Step 2 through the infinite sub-chain C0 = (0,1) x {1}, g0 = identity.
    C0 = ChainDescriptor(family=Family(1, Interval(0, 1)))
    pts = C0.sample_members(rng, samples, approach=16)
    g0_ok = all(x in sym_F(x) and sym_leq(x, x) for x in pts)
    y0_choices = [y for y in sym_F(sym_sup(C0)) if is_upper_bound(y, C0.image())]
    cases.append(CaseResult(
        "corrected: step 2 via C0 = (0,1) x {1}",
        "sup C0 = M = x0; g0(a, 1) = (a, 1) in F(a, 1); y0 = M in F(M) dominates g0, so y0 >= x0",
        sym_sup(C0) == x0 and g0_ok and y0_choices == [TOP] and sym_leq(x0, TOP),
        len(pts),
    ))

    C = X0
    y0 = TOP
    ybar = [z for z in sym_F(y0) if sym_leq(y0, z)]
    cases.append(CaseResult(
        "corrected: step 3 certifies M",
        "ybar0 = M in F(M), y0 = M in X0 and in C, so x0 = y0 = M in F(M)",
        ybar == [TOP] and y0 in X0 and y0 in C and y0 == x0 and x0 in sym_F(x0),
        1,
    ))

    cases.append(CaseResult(
        "corrected: ascent from e = m",
        "m in F(m): fixed point m reached with zero ascent steps",
        SEED in sym_F(SEED),
        1,
    ))

    grid_ok = True
    for den in (4, 8):
        p, F, e = finite_grid(den)
        ascent = smithson_ascent(p, F, e)
        trace = corrected_proof_trace(p, F, e)
        grid_ok = grid_ok and (
            p.labels[ascent.result] == "m"
            and not ascent.ascent_steps
            and p.labels[trace.result] == "M"
        )
    cases.append(CaseResult(
        "corrected: finite grids agree",
        "grids with denominators 4 and 8: ascent from m stops at m, maximal-chain route ends at M",
        grid_ok,
        2,
    ))
    return ClassCaseReport("corrected-construction", tuple(cases))


# -- finite restrictions ----------------------------------------------------------


def grid_elements(denominator: int) -> list[SymElement]:
    """``m``, the points ``(k/den, i)`` and ``M``, in that order."""
    if denominator < 2:
        raise ValueError("denominator must be at least 2")
    pts = [BOTTOM]
    for i in (1, 2):
        pts += [branch(i, Fraction(k, denominator)) for k in range(1, denominator)]
    return pts + [TOP]


def finite_poset(elements: Sequence[SymElement]) -> FinitePoset:
    """The order restricted to ``elements``, validated as a finite poset."""
    elements = list(elements)
    return FinitePoset.from_leq(
        [str(x) for x in elements], lambda i, j: sym_leq(elements[i], elements[j])
    )


def finite_grid(denominator: int) -> tuple[FinitePoset, Correspondence, int]:
    """Restriction of the instance to parameters ``k/denominator``.

    Every image of ``F`` stays in the grid, so ``F`` restricts exactly.
    """
    elements = grid_elements(denominator)
    p = finite_poset(elements)
    where = {x: i for i, x in enumerate(elements)}
    F = Correspondence(tuple(frozenset(where[y] for y in sym_F(x)) for x in elements))
    return p, F, where[SEED]


def counterexample_reports(
    samples: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED
) -> list[ClassCaseReport]:
    return [
        verify_poset_axioms(samples, seed),
        verify_condition_I_sym(samples, seed),
        verify_condition_III_sym(samples, seed),
        verify_original_proof_gap(samples, seed),
        verify_corrected_on_counterexample(samples, seed),
    ]
