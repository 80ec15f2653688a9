"""Seeded random posets and correspondences that satisfy condition I by construction."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .correspondence import Correspondence
from .errors import NoTopElement
from .poset import FinitePoset, members

DEFAULT_SEED = 1971


@dataclass(frozen=True)
class GenConfig:
    n: int
    edge_density: Fraction | float = Fraction(1, 2)
    selectors: int = 1
    seed: int = DEFAULT_SEED
    ensure_top: bool = True

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if not 0 <= self.edge_density <= 1:
            raise ValueError("edge_density must lie in [0, 1]")
        if self.selectors < 1:
            raise ValueError("selectors must be at least 1")


def _rng(seed: int | random.Random) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def random_poset(cfg: GenConfig, rng: random.Random | None = None) -> FinitePoset:
    """Closure of a random forward DAG on ``x0 .. x{n-1}``.

    Each edge ``i -> j`` with ``i < j`` is kept with probability
    ``edge_density``. With ``ensure_top`` a greatest element ``top`` is
    adjoined when the closure has none, giving ``n + 1`` elements.
    """
    rng = _rng(cfg.seed if rng is None else rng)
    density = cfg.edge_density
    n = cfg.n
    up = [1 << i for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < density:
                up[i] |= 1 << j
    # Edges only point forward, so one reverse sweep closes the relation.
    for i in range(n - 1, -1, -1):
        for j in members(up[i] & ~(1 << i)):
            up[i] |= up[j]
    p = FinitePoset([f"x{i}" for i in range(n)], up)
    if cfg.ensure_top and p.greatest() is None:
        p = p.with_top("top")
    return p


def random_isotone_map(
    p: FinitePoset, seed: int | random.Random, restrict: dict[int, int] | None = None
) -> dict[int, int]:
    """Random isotone self-map, swept along a linear extension.

    ``g(x)`` is drawn uniformly from the common upper bounds of the values
    already assigned below ``x``; the greatest element is always among
    them. ``restrict`` optionally narrows the draw at given elements to the
    intersection with a mask.
    """
    top = p.greatest()
    if top is None:
        raise NoTopElement("an isotone sweep needs a greatest element")
    rng = _rng(seed)
    g: dict[int, int] = {}
    for x in p.linear_extension():
        allowed = p.full_mask
        for y in members(p.down[x] & ~(1 << x)):
            allowed &= p.up[g[y]]
        if restrict and x in restrict and allowed & restrict[x]:
            allowed &= restrict[x]
        choices = members(allowed)
        g[x] = choices[rng.randrange(len(choices))]
    return g


def random_condition_I_correspondence(
    p: FinitePoset, cfg: GenConfig, rng: random.Random | None = None
) -> Correspondence:
    """Union of ``cfg.selectors`` random isotone graphs.

    Condition I holds: for ``y2 = g(x2)`` and ``x1 >= x2`` the same map gives
    ``g(x1) >= g(x2)``.
    """
    rng = _rng(cfg.seed if rng is None else rng)
    maps = [random_isotone_map(p, rng) for _ in range(cfg.selectors)]
    return Correspondence(tuple(frozenset(g[x] for g in maps) for x in range(len(p))))


def random_seeded_instance(cfg: GenConfig) -> tuple[FinitePoset, Correspondence, int]:
    """Poset, condition-I correspondence and a seed ``e`` with some ``y >= e`` in ``F(e)``.

    ``e`` is the lowest-index minimal element; the first map's draw at
    ``e`` is restricted to the up-set of ``e``.
    """
    rng = random.Random(cfg.seed)
    p = random_poset(cfg, rng)
    if p.greatest() is None:
        p = p.with_top("top")
    e = p.minimal_elements()[0]
    maps = [random_isotone_map(p, rng, restrict={e: p.up[e]})]
    maps += [random_isotone_map(p, rng) for _ in range(cfg.selectors - 1)]
    F = Correspondence(tuple(frozenset(g[x] for g in maps) for x in range(len(p))))
    return p, F, e


def mutate_drop_image(
    F: Correspondence, seed: int | random.Random
) -> Correspondence | None:
    """Remove one image point from an image with at least two points."""
    rng = _rng(seed)
    sites = [x for x, image in enumerate(F.images) if len(image) > 1]
    if not sites:
        return None
    x = sites[rng.randrange(len(sites))]
    image = sorted(F.images[x])
    drop = image[rng.randrange(len(image))]
    images = list(F.images)
    images[x] = frozenset(y for y in image if y != drop)
    return Correspondence(tuple(images))
