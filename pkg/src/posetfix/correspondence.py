"""Nonempty-valued correspondences ``F : X => X`` and their order conditions."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import ClassVar, Iterable, Iterator, Mapping, Sequence

from .errors import BudgetExceeded, CorrespondenceError
from .poset import ElementSet, FinitePoset, members, to_mask


@dataclass(frozen=True)
class Correspondence:
    """Per-element images; ``images[x]`` is ``F(x)``."""

    images: tuple[ElementSet, ...]
    masks: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        images = tuple(ElementSet(int(y) for y in image) for image in self.images)
        for x, image in enumerate(images):
            if not image:
                raise CorrespondenceError(f"F({x}) is empty")
            if min(image) < 0:
                raise CorrespondenceError(f"F({x}) has a negative index")
        object.__setattr__(self, "images", images)
        object.__setattr__(self, "masks", tuple(to_mask(i) for i in images))

    @classmethod
    def identity(cls, n: int) -> "Correspondence":
        return cls(tuple(ElementSet([x]) for x in range(n)))

    @classmethod
    def from_function(cls, f: Sequence[int] | Mapping[int, int]) -> "Correspondence":
        """The graph of a single-valued map."""
        if isinstance(f, Mapping):
            f = [f[x] for x in range(len(f))]
        return cls(tuple(ElementSet([y]) for y in f))

    @classmethod
    def from_labels(
        cls, p: FinitePoset, mapping: Mapping[str, Iterable[str]]
    ) -> "Correspondence":
        missing = [label for label in p.labels if label not in mapping]
        if missing:
            raise CorrespondenceError(f"F undefined at {missing}")
        extra = [label for label in mapping if label not in p._index]
        if extra:
            raise CorrespondenceError(f"F defined at unknown labels {extra}")
        images = []
        for label in p.labels:
            try:
                images.append(ElementSet(p.index(y) for y in mapping[label]))
            except KeyError as exc:
                raise CorrespondenceError(f"F({label}) names an unknown element") from exc
        return cls(tuple(images))

    def to_labels(self, p: FinitePoset) -> dict[str, list[str]]:
        return {
            p.labels[x]: [p.labels[y] for y in sorted(image)]
            for x, image in enumerate(self.images)
        }

    def validate_for(self, p: FinitePoset) -> None:
        if len(self.images) != len(p):
            raise CorrespondenceError(
                f"F has {len(self.images)} images but the poset has {len(p)} elements"
            )
        if any(mask & ~p.full_mask for mask in self.masks):
            raise CorrespondenceError("F refers to an element outside the poset")

    def union(self, other: "Correspondence") -> "Correspondence":
        return Correspondence(tuple(a | b for a, b in zip(self.images, other.images)))

    def __call__(self, x: int) -> ElementSet:
        return self.images[x]

    def __len__(self) -> int:
        return len(self.images)


# -- witnesses ------------------------------------------------------------


class ConditionWitness:
    """A concrete violation of condition I or III that can be replayed."""

    kind: ClassVar[str]

    def replay(self, p: FinitePoset, F: Correspondence) -> bool:
        raise NotImplementedError


@dataclass(frozen=True)
class ConditionIViolation(ConditionWitness):
    """``x1 >= x2`` and ``y2`` in ``F(x2)``, but nothing in ``F(x1)`` is ``>= y2``."""

    kind: ClassVar[str] = "I-violation"
    x1: int
    x2: int
    y2: int

    def replay(self, p: FinitePoset, F: Correspondence) -> bool:
        if not p.leq(self.x2, self.x1) or self.y2 not in F(self.x2):
            return False
        return not any(p.leq(self.y2, y1) for y1 in F(self.x1))

    def describe(self, p: FinitePoset) -> str:
        lab = p.labels
        return (
            f"{lab[self.x1]} >= {lab[self.x2]} and {lab[self.y2]} in F({lab[self.x2]}), "
            f"but no y1 in F({lab[self.x1]}) has y1 >= {lab[self.y2]}"
        )


@dataclass(frozen=True)
class ConditionIIIViolation(ConditionWitness):
    """An isotone selection ``g`` on ``chain`` not dominated inside ``F(x0)``."""

    kind: ClassVar[str] = "III-violation"
    chain: tuple[int, ...]
    selection: tuple[tuple[int, int], ...]
    x0: int

    def replay(self, p: FinitePoset, F: Correspondence) -> bool:
        g = dict(self.selection)
        if set(g) != set(self.chain) or not self.chain:
            return False
        if not p.is_chain(self.chain) or p.sup(self.chain) != self.x0:
            return False
        if any(g[x] not in F(x) for x in self.chain):
            return False
        if not p.is_isotone(self.chain, g):
            return False
        return not any(
            all(p.leq(g[x], y0) for x in self.chain) for y0 in F(self.x0)
        )

    def describe(self, p: FinitePoset) -> str:
        lab = p.labels
        g = ", ".join(f"g({lab[x]}) = {lab[y]}" for x, y in self.selection)
        return (
            f"chain {{{', '.join(lab[x] for x in self.chain)}}} with sup {lab[self.x0]}; "
            f"{g}; no y0 in F({lab[self.x0]}) is >= every g(x)"
        )


# -- condition checks -----------------------------------------------------


def check_condition_I(p: FinitePoset, F: Correspondence) -> ConditionIViolation | None:
    """Return the lexicographically first ``(x1, x2, y2)`` violation, or ``None``."""
    F.validate_for(p)
    up = p.up
    for x1 in range(len(p)):
        image1 = F.masks[x1]
        for x2 in members(p.down[x1]):
            for y2 in members(F.masks[x2]):
                if not image1 & up[y2]:
                    return ConditionIViolation(x1, x2, y2)
    return None


def _up_closure(p: FinitePoset, mask: int) -> int:
    out = 0
    for x in members(mask):
        out |= p.up[x]
    return out


def _down_closure(p: FinitePoset, mask: int) -> int:
    out = 0
    for x in members(mask):
        out |= p.down[x]
    return out


def _undominated_selection(
    p: FinitePoset, F: Correspondence, chain: Sequence[int], x0: int
) -> ConditionIIIViolation | None:
    """Search the isotone selections on an ascending chain for a violation.

    On a chain an isotone ``g`` is dominated by ``y0`` iff ``g(top) <= y0``,
    so it is enough to propagate the set of values ``g`` can take at each
    position (a pruned depth-first search collapsed by value).
    """
    reach = [F.masks[chain[0]]]
    for x in chain[1:]:
        reach.append(F.masks[x] & _up_closure(p, reach[-1]))
        if not reach[-1]:
            return None
    bad = reach[-1] & ~_down_closure(p, F.masks[x0])
    if not bad:
        return None
    value = members(bad)[0]
    values = [value]
    for i in range(len(chain) - 2, -1, -1):
        value = members(reach[i] & p.down[value])[0]
        values.append(value)
    values.reverse()
    return ConditionIIIViolation(tuple(chain), tuple(zip(chain, values)), x0)


def check_condition_III(
    p: FinitePoset, F: Correspondence, max_chain_size: int | None = None
) -> ConditionIIIViolation | None:
    """Check condition III over every chain of size <= ``max_chain_size``.

    Returns the first violation found (chains in lexicographic order), or
    ``None``. When no violation is found but longer chains exist, raises
    :class:`BudgetExceeded` with the number of unchecked chains.
    """
    F.validate_for(p)
    if max_chain_size is not None and max_chain_size < 1:
        raise ValueError("max_chain_size must be at least 1")
    limit = len(p) if max_chain_size is None else max_chain_size
    for chain in p.all_chains:
        if len(chain) > limit:
            continue
        x0 = p.sup(chain)
        if x0 is None:
            continue
        witness = _undominated_selection(p, F, chain, x0)
        if witness is not None:
            return witness
    if limit < p.height():
        counts = p.count_chains_by_size()
        skipped = sum(c for k, c in counts.items() if k > limit)
        raise BudgetExceeded(skipped, limit)
    return None


def isotone_selections(
    p: FinitePoset, F: Correspondence, chain: Iterable[int]
) -> Iterator[dict[int, int]]:
    """Every isotone ``g`` on ``chain`` with ``g(x)`` in ``F(x)``.

    Depth-first in ascending chain order; prefixes that already break
    isotonicity are cut.
    """
    chain = p.sort_ascending(chain)

    def grow(i: int, g: dict[int, int]) -> Iterator[dict[int, int]]:
        if i == len(chain):
            yield dict(g)
            return
        x = chain[i]
        for y in sorted(F(x)):
            if i and not p.leq(g[chain[i - 1]], y):
                continue
            g[x] = y
            yield from grow(i + 1, g)
            del g[x]

    yield from grow(0, {})


# -- seeds and fixed points ----------------------------------------------


def expansive_set(p: FinitePoset, F: Correspondence) -> ElementSet:
    """``{x : some z in F(x) has z >= x}``."""
    F.validate_for(p)
    return ElementSet(x for x in range(len(p)) if F.masks[x] & p.up[x])


def expansive_witnesses(p: FinitePoset, F: Correspondence, x: int) -> list[int]:
    return members(F.masks[x] & p.up[x])


def find_seed(p: FinitePoset, F: Correspondence) -> tuple[int, int] | None:
    """Lowest-index ``e`` with some ``y`` in ``F(e)``, ``y >= e``."""
    for e in sorted(expansive_set(p, F)):
        return e, expansive_witnesses(p, F, e)[0]
    return None


def fixed_points(p: FinitePoset, F: Correspondence) -> ElementSet:
    """Brute-force scan for ``x`` in ``F(x)``."""
    F.validate_for(p)
    return ElementSet(x for x in range(len(p)) if x in F.images[x])
