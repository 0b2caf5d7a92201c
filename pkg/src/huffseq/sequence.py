from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .numeric import NumericValue, Scale, to_numeric


class Family(str, enum.Enum):
    FIB = "fib"
    FIB_CYCLIC = "fib_cyclic"
    TANGENT = "tangent"
    THREE = "three"
    INT = "int"
    FIXTURE = "fixture"
    CUSTOM = "custom"


@dataclass(frozen=True)
class HuffmanSequence:
    """A finite real sequence plus how it was made.

    ``rotation_offset`` counts the left cyclic steps applied during
    construction (0 for direct constructions).
    """

    family: Family
    elements: tuple[NumericValue, ...]
    scale: Scale | None = None
    rotation_offset: int = 0
    label: str = ""
    meta: dict = field(default_factory=dict, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "family", Family(self.family))
        object.__setattr__(self, "elements", tuple(to_numeric(x) for x in self.elements))

    @property
    def length(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    @property
    def exact(self) -> bool:
        return all(isinstance(x, Fraction) for x in self.elements)

    def floats(self) -> np.ndarray:
        return np.array([float(x) for x in self.elements], dtype=float)

    def rotated(self, k: int) -> "HuffmanSequence":
        """Rotate left by ``k`` steps (element k becomes first)."""
        n = len(self.elements)
        k %= n
        elems = self.elements[k:] + self.elements[:k]
        return HuffmanSequence(
            self.family, elems, self.scale, (self.rotation_offset + k) % n, self.label, dict(self.meta)
        )

    @classmethod
    def custom(cls, values: Iterable, label: str = "") -> "HuffmanSequence":
        return cls(Family.CUSTOM, tuple(values), label=label)


def elements_of(seq: HuffmanSequence | Sequence) -> tuple[NumericValue, ...]:
    """Elements of a HuffmanSequence or any iterable of real numbers."""
    if isinstance(seq, HuffmanSequence):
        return seq.elements
    if isinstance(seq, np.ndarray):
        if seq.dtype.kind in "iu":
            return tuple(Fraction(int(x)) for x in seq.ravel())
        return tuple(float(x) for x in seq.ravel())
    return tuple(to_numeric(x) for x in seq)
