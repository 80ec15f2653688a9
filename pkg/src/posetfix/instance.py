"""JSON instance files: a poset by its covers, a correspondence, an optional seed.

Format (keys are fixed)::

    {"elements": ["m", "a", "b", "M"],
     "covers": [["m", "a"], ["m", "b"], ["a", "M"], ["b", "M"]],
     "F": {"m": ["m"], "a": ["a"], "b": ["b"], "M": ["M"]},
     "seed_element": "m"}

Each cover ``[lo, hi]`` reads ``hi >= lo``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .correspondence import Correspondence
from .poset import FinitePoset

KEYS = ("elements", "covers", "F", "seed_element")


class InstanceFormatError(ValueError):
    pass


@dataclass(frozen=True)
class InstanceSpec:
    elements: tuple[str, ...]
    covers: tuple[tuple[str, str], ...]
    F: tuple[tuple[str, tuple[str, ...]], ...]
    seed_element: str | None = None

    @classmethod
    def from_instance(
        cls, p: FinitePoset, F: Correspondence, e: int | None = None
    ) -> "InstanceSpec":
        return cls(
            elements=p.labels,
            covers=tuple(p.hasse_cover_labels()),
            F=tuple((k, tuple(v)) for k, v in F.to_labels(p).items()),
            seed_element=None if e is None else p.labels[e],
        )

    def to_instance(self) -> tuple[FinitePoset, Correspondence, int | None]:
        """Validate into a poset, a correspondence and the seed index."""
        p = FinitePoset.from_cover_relation(self.elements, self.covers)
        F = Correspondence.from_labels(p, dict(self.F))
        e = None if self.seed_element is None else p.index(self.seed_element)
        return p, F, e

    def to_json_obj(self) -> dict:
        obj = {
            "elements": list(self.elements),
            "covers": [list(c) for c in self.covers],
            "F": {k: list(v) for k, v in self.F},
        }
        if self.seed_element is not None:
            obj["seed_element"] = self.seed_element
        return obj

    def dumps(self) -> str:
        return json.dumps(self.to_json_obj(), indent=2) + "\n"

    @classmethod
    def from_json_obj(cls, obj) -> "InstanceSpec":
        if not isinstance(obj, dict):
            raise InstanceFormatError("instance must be a JSON object")
        unknown = set(obj) - set(KEYS)
        if unknown:
            raise InstanceFormatError(f"unknown keys: {sorted(unknown)}")
        for key in ("elements", "covers", "F"):
            if key not in obj:
                raise InstanceFormatError(f"missing key {key!r}")
        elements, covers, F = obj["elements"], obj["covers"], obj["F"]
        if not isinstance(elements, list) or not all(isinstance(x, str) for x in elements):
            raise InstanceFormatError("'elements' must be a list of strings")
        if not isinstance(covers, list) or not all(
            isinstance(c, list) and len(c) == 2 and all(isinstance(x, str) for x in c)
            for c in covers
        ):
            raise InstanceFormatError("'covers' must be a list of [lo, hi] label pairs")
        if not isinstance(F, dict) or not all(
            isinstance(v, list) and all(isinstance(x, str) for x in v) for v in F.values()
        ):
            raise InstanceFormatError("'F' must map labels to lists of labels")
        seed = obj.get("seed_element")
        if seed is not None and not isinstance(seed, str):
            raise InstanceFormatError("'seed_element' must be a label")
        return cls(
            elements=tuple(elements),
            covers=tuple((lo, hi) for lo, hi in covers),
            F=tuple((k, tuple(v)) for k, v in F.items()),
            seed_element=seed,
        )

    @classmethod
    def loads(cls, text: str) -> "InstanceSpec":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InstanceFormatError(f"invalid JSON: {exc}") from exc
        return cls.from_json_obj(obj)

    @classmethod
    def read(cls, path: str | Path) -> "InstanceSpec":
        return cls.loads(Path(path).read_text(encoding="utf-8"))

    def write(self, path: str | Path) -> None:
        Path(path).write_text(self.dumps(), encoding="utf-8")


def to_dot(p: FinitePoset) -> str:
    """Hasse diagram in DOT, edges from the lower to the upper element."""
    lines = ["digraph hasse {"]
    lines += [f'  "{label}";' for label in p.labels]
    lines += [f'  "{lo}" -> "{hi}";' for lo, hi in p.hasse_cover_labels()]
    lines.append("}")
    return "\n".join(lines) + "\n"
