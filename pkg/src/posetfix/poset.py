"""Finite partially ordered sets.

Elements are the integers ``0..n-1`` and each carries a unique string label.
The order is stored as ``x <= y``; the ``x >= y`` reading is ``leq(y, x)``.
The full relation is materialized at construction as two tables of bitmasks,
``up[x]`` (everything above ``x``) and ``down[x]`` (everything below), so
every comparison is a single bit test.
"""

from __future__ import annotations

from functools import cached_property, lru_cache
from typing import Callable, Iterable, Iterator, Mapping, Sequence

from .errors import (
    CycleError,
    DuplicateLabelError,
    EmptySetError,
    NotAChainError,
    NotSubsetError,
    PartialMapError,
    PosetAxiomError,
    UnknownLabelError,
)

ElementSet = frozenset  # frozenset[int]


def to_mask(elements: Iterable[int]) -> int:
    mask = 0
    for x in elements:
        mask |= 1 << x
    return mask


@lru_cache(maxsize=1 << 16)
def members(mask: int) -> tuple[int, ...]:
    """Indices of the set bits of ``mask`` in ascending order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def _check_labels(labels: Sequence[str]) -> tuple[str, ...]:
    labels = tuple(str(label) for label in labels)
    seen = set()
    for label in labels:
        if not label:
            raise DuplicateLabelError("labels must be nonempty strings")
        if label in seen:
            raise DuplicateLabelError(f"duplicate label {label!r}")
        seen.add(label)
    return labels


class FinitePoset:
    """An immutable finite poset with O(1) order queries."""

    def __init__(self, labels: Sequence[str], up: Sequence[int]):
        # Trusted constructor: ``up`` must already be a partial order.
        self.labels = _check_labels(labels)
        self.up = tuple(up)
        if len(self.up) != len(self.labels):
            raise ValueError("one up-set mask per label is required")
        down = [0] * len(self.labels)
        for x, mask in enumerate(self.up):
            for y in members(mask):
                down[y] |= 1 << x
        self.down = tuple(down)
        self.full_mask = (1 << len(self.labels)) - 1
        self._index = {label: i for i, label in enumerate(self.labels)}

    # -- construction -----------------------------------------------------

    @classmethod
    def from_cover_relation(
        cls, labels: Sequence[str], covers: Iterable[tuple[str, str]]
    ) -> "FinitePoset":
        """Build the reflexive-transitive closure of ``covers``.

        Each pair ``(lo, hi)`` means ``lo <= hi``. Raises :class:`CycleError`
        when the closure is not antisymmetric.
        """
        labels = _check_labels(labels)
        index = {label: i for i, label in enumerate(labels)}
        n = len(labels)
        up = [1 << i for i in range(n)]
        for lo, hi in covers:
            try:
                up[index[lo]] |= 1 << index[hi]
            except KeyError as exc:
                raise UnknownLabelError(f"cover refers to unknown label {exc.args[0]!r}")
        # Warshall over bit rows.
        for k in range(n):
            bit = 1 << k
            row = up[k]
            for i in range(n):
                if up[i] & bit:
                    up[i] |= row
        for i in range(n):
            for j in members(up[i] & ~(1 << i)):
                if up[j] >> i & 1:
                    raise CycleError(
                        f"{labels[i]!r} and {labels[j]!r} lie on a cycle of covers"
                    )
        return cls(labels, up)

    @classmethod
    def from_leq(
        cls, labels: Sequence[str], leq: Callable[[int, int], bool]
    ) -> "FinitePoset":
        """Materialize an explicit relation and check all three poset axioms."""
        labels = _check_labels(labels)
        n = len(labels)
        up = [0] * n
        for i in range(n):
            for j in range(n):
                if leq(i, j):
                    up[i] |= 1 << j
        for i in range(n):
            if not up[i] >> i & 1:
                raise PosetAxiomError(f"not reflexive at {labels[i]!r}")
            for j in members(up[i] & ~(1 << i)):
                if up[j] >> i & 1:
                    raise PosetAxiomError(
                        f"not antisymmetric: {labels[i]!r}, {labels[j]!r}"
                    )
                if up[j] & ~up[i]:
                    k = members(up[j] & ~up[i])[0]
                    raise PosetAxiomError(
                        f"not transitive: {labels[i]!r} <= {labels[j]!r} <= {labels[k]!r}"
                    )
        return cls(labels, up)

    @classmethod
    def chain(cls, n: int, prefix: str = "") -> "FinitePoset":
        """The total order ``0 < 1 < ... < n-1``."""
        labels = [f"{prefix}{i}" for i in range(n)]
        return cls(labels, [((1 << n) - 1) & ~((1 << i) - 1) for i in range(n)])

    @classmethod
    def antichain(cls, n: int, prefix: str = "") -> "FinitePoset":
        return cls([f"{prefix}{i}" for i in range(n)], [1 << i for i in range(n)])

    def with_top(self, label: str = "top") -> "FinitePoset":
        """Adjoin a new greatest element."""
        n = len(self)
        up = [mask | (1 << n) for mask in self.up] + [1 << n]
        return FinitePoset(self.labels + (label,), up)

    # -- basic protocol ---------------------------------------------------

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self) -> Iterator[int]:
        return iter(range(len(self.labels)))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FinitePoset):
            return NotImplemented
        return self.labels == other.labels and self.up == other.up

    def __hash__(self) -> int:
        return hash((self.labels, self.up))

    def __repr__(self) -> str:
        return f"FinitePoset(n={len(self)}, covers={len(self.hasse_covers())})"

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownLabelError(f"unknown label {label!r}") from None

    def label(self, x: int) -> str:
        return self.labels[x]

    def _universe_mask(self, universe: Iterable[int] | None) -> int:
        if universe is None:
            return self.full_mask
        mask = to_mask(universe)
        if mask & ~self.full_mask:
            raise IndexError("element index out of range")
        return mask

    # -- order queries ----------------------------------------------------

    def leq(self, x: int, y: int) -> bool:
        return bool(self.up[x] >> y & 1)

    def geq(self, x: int, y: int) -> bool:
        return bool(self.up[y] >> x & 1)

    def lt(self, x: int, y: int) -> bool:
        return x != y and bool(self.up[x] >> y & 1)

    def comparable(self, x: int, y: int) -> bool:
        return bool((self.up[x] | self.down[x]) >> y & 1)

    def upper_bounds(self, S: Iterable[int]) -> ElementSet:
        return ElementSet(members(self._upper_bound_mask(S)))

    def _upper_bound_mask(self, S: Iterable[int]) -> int:
        mask = self.full_mask
        empty = True
        for s in S:
            mask &= self.up[s]
            empty = False
        if empty:
            raise EmptySetError("upper bounds of the empty set are not defined here")
        return mask

    def sup(self, S: Iterable[int]) -> int | None:
        """Least upper bound of a nonempty set, or ``None`` when absent."""
        bounds = self._upper_bound_mask(S)
        for u in members(bounds):
            if bounds & ~self.up[u] == 0:
                return u
        return None

    def is_chain(self, S: Iterable[int]) -> bool:
        mask = to_mask(S)
        for s in members(mask):
            if mask & ~(self.up[s] | self.down[s]):
                return False
        return True

    def is_antichain(self, S: Iterable[int]) -> bool:
        mask = to_mask(S)
        return all(
            (self.up[s] | self.down[s]) & mask == 1 << s for s in members(mask)
        )

    def maximum(self, S: Iterable[int]) -> int | None:
        """The greatest member of ``S`` if it has one."""
        mask = to_mask(S)
        for s in members(mask):
            if mask & ~self.down[s] == 0:
                return s
        return None

    def greatest(self) -> int | None:
        return self.maximum(self)

    def least(self) -> int | None:
        mask = self.full_mask
        for s in range(len(self)):
            if mask & ~self.up[s] == 0:
                return s
        return None

    def minimal_elements(self, universe: Iterable[int] | None = None) -> list[int]:
        mask = self._universe_mask(universe)
        return [x for x in members(mask) if self.down[x] & mask == 1 << x]

    def maximal_elements(self, universe: Iterable[int] | None = None) -> list[int]:
        mask = self._universe_mask(universe)
        return [x for x in members(mask) if self.up[x] & mask == 1 << x]

    def sort_ascending(self, S: Iterable[int]) -> list[int]:
        """Order ``S`` along a linear extension (ties by index)."""
        return sorted(S, key=lambda x: (self.down[x].bit_count(), x))

    def linear_extension(self) -> list[int]:
        return self.sort_ascending(range(len(self)))

    def is_isotone(self, domain: Iterable[int], f: Mapping[int, int]) -> bool:
        """True iff ``x >= y`` implies ``f(x) >= f(y)`` on ``domain``."""
        domain = list(domain)
        missing = [x for x in domain if x not in f]
        if missing:
            raise PartialMapError(f"map undefined at {missing}")
        for x in domain:
            for y in domain:
                if self.leq(y, x) and not self.leq(f[y], f[x]):
                    return False
        return True

    # -- chains -----------------------------------------------------------

    def extend_to_maximal_chain(
        self, universe: Iterable[int], C: Iterable[int]
    ) -> ElementSet:
        """Greedy ascending-index extension of ``C`` to a maximal chain."""
        universe_mask = self._universe_mask(universe)
        chain_mask = to_mask(C)
        if chain_mask & ~universe_mask:
            raise NotSubsetError("C is not contained in the universe")
        if not self.is_chain(members(chain_mask)):
            raise NotAChainError("C is not a chain")
        # One pass suffices: a rejected candidate stays incomparable to some member.
        for x in members(universe_mask & ~chain_mask):
            if chain_mask & ~(self.up[x] | self.down[x]) == 0:
                chain_mask |= 1 << x
        return ElementSet(members(chain_mask))

    def is_maximal_chain(self, universe: Iterable[int], C: Iterable[int]) -> bool:
        universe_mask = self._universe_mask(universe)
        chain_mask = to_mask(C)
        if chain_mask & ~universe_mask or not self.is_chain(members(chain_mask)):
            return False
        return all(
            chain_mask & ~(self.up[x] | self.down[x])
            for x in members(universe_mask & ~chain_mask)
        )

    def enumerate_chains(
        self, universe: Iterable[int] | None = None, max_size: int | None = None
    ) -> Iterator[ElementSet]:
        """Yield every nonempty chain inside ``universe`` of size <= ``max_size``.

        Depth-first over comparability, always appending a larger index, so
        each chain is produced once, in lexicographic order of its sorted
        index tuple.
        """
        mask = self._universe_mask(universe)
        if max_size is None:
            max_size = len(self)
        if max_size < 1:
            raise ValueError("max_size must be at least 1")
        comparable = [
            (self.up[x] | self.down[x]) & mask for x in range(len(self))
        ]

        def grow(chain: list[int], candidates: int) -> Iterator[ElementSet]:
            yield ElementSet(chain)
            if len(chain) == max_size:
                return
            for y in members(candidates):
                above = candidates & ~((1 << (y + 1)) - 1)
                yield from grow(chain + [y], above & comparable[y])

        for x in members(mask):
            above = mask & ~((1 << (x + 1)) - 1)
            yield from grow([x], above & comparable[x])

    def count_chains_by_size(self, universe: Iterable[int] | None = None) -> dict[int, int]:
        """Number of nonempty chains of each size, by dynamic programming."""
        mask = self._universe_mask(universe)
        order = [x for x in self.linear_extension() if mask >> x & 1]
        # ending[x][k]: chains of size k whose largest element is x.
        ending: dict[int, dict[int, int]] = {}
        totals: dict[int, int] = {}
        for x in order:
            counts = {1: 1}
            for y in members(self.down[x] & mask & ~(1 << x)):
                for k, c in ending[y].items():
                    counts[k + 1] = counts.get(k + 1, 0) + c
            ending[x] = counts
            for k, c in counts.items():
                totals[k] = totals.get(k, 0) + c
        return dict(sorted(totals.items()))

    def covers_within(self, universe: Iterable[int] | None = None) -> list[tuple[int, int]]:
        """Cover pairs ``(lo, hi)`` of the subposet induced on ``universe``."""
        mask = self._universe_mask(universe)
        pairs = []
        for x in members(mask):
            for y in members(self.up[x] & mask & ~(1 << x)):
                between = self.up[x] & self.down[y] & mask
                if between == (1 << x) | (1 << y):
                    pairs.append((x, y))
        return pairs

    def maximal_chains(self, universe: Iterable[int] | None = None) -> Iterator[ElementSet]:
        """Every maximal chain of the subposet induced on ``universe``.

        In a finite poset these are exactly the cover paths running from a
        minimal to a maximal element.
        """
        mask = self._universe_mask(universe)
        successors: dict[int, list[int]] = {x: [] for x in members(mask)}
        for lo, hi in self.covers_within(members(mask)):
            successors[lo].append(hi)

        def walk(path: list[int]) -> Iterator[ElementSet]:
            nxt = successors[path[-1]]
            if not nxt:
                yield ElementSet(path)
                return
            for y in nxt:
                yield from walk(path + [y])

        for x in self.minimal_elements(members(mask)):
            yield from walk([x])

    @cached_property
    def _height(self) -> int:
        best: dict[int, int] = {}
        for x in self.linear_extension():
            below = [best[y] for y in members(self.down[x] & ~(1 << x))]
            best[x] = 1 + max(below, default=0)
        return max(best.values(), default=0)

    def height(self) -> int:
        """Size of the longest chain (0 for the empty poset)."""
        return self._height

    @cached_property
    def all_chains(self) -> tuple[tuple[int, ...], ...]:
        """All nonempty chains, each sorted ascending in the order."""
        return tuple(
            tuple(self.sort_ascending(c)) for c in self.enumerate_chains()
        )

    def hasse_covers(self) -> list[tuple[int, int]]:
        """Transitive reduction of the strict order as ``(lo, hi)`` index pairs."""
        return self.covers_within(None)

    def hasse_cover_labels(self) -> list[tuple[str, str]]:
        return [(self.labels[a], self.labels[b]) for a, b in self.hasse_covers()]
