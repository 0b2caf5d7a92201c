"""Exact-or-float scalars.

Values are plain :class:`fractions.Fraction` when exact and ``float``
otherwise, so ordinary Python arithmetic already gives the promotion rule
we want: Fraction op Fraction stays exact, anything touching a float
becomes a float.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational, Real
from typing import Union

import numpy as np

from .errors import InvalidScale

NumericValue = Union[Fraction, float]


def is_exact(x: object) -> bool:
    return isinstance(x, Fraction)


def as_float(x: NumericValue) -> float:
    return float(x)


def to_numeric(x: object) -> NumericValue:
    """Normalize ints/rationals to Fraction and real numbers to float."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (bool, np.bool_)):
        raise InvalidScale(f"boolean is not a numeric value: {x!r}")
    if isinstance(x, (int, np.integer)):
        return Fraction(int(x))
    if isinstance(x, Rational):
        return Fraction(x.numerator, x.denominator)
    if isinstance(x, (Real, np.floating)):
        return float(x)
    raise InvalidScale(f"not a real number: {x!r}")


def parse_number(text: str) -> NumericValue:
    """Parse a token: anything with '/' or without a decimal point/exponent is exact."""
    token = text.strip()
    if not token:
        raise InvalidScale("empty numeric token")
    try:
        if "/" in token or not any(c in token for c in ".eEnN"):
            return Fraction(token)
        value = float(token)
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidScale(f"cannot parse number {text!r}") from exc
    return value


def format_number(x: NumericValue) -> str | float:
    """Exact values become "p" or "p/q" strings; floats pass through."""
    if isinstance(x, Fraction):
        return str(x)
    return float(x)


@dataclass(frozen=True)
class Scale:
    """The scaling parameter ``s``; exact iff built from an int or rational."""

    value: NumericValue

    def __post_init__(self) -> None:
        v = to_numeric(self.value)
        if isinstance(v, float) and not math.isfinite(v):
            raise InvalidScale(f"scale must be finite, got {v!r}")
        object.__setattr__(self, "value", v)

    @property
    def exact(self) -> bool:
        return isinstance(self.value, Fraction)

    def __float__(self) -> float:
        return float(self.value)

    @classmethod
    def parse(cls, text: str) -> "Scale":
        return cls(parse_number(text))

    def to_json(self) -> dict:
        return {"exact": self.exact, "value": format_number(self.value)}

    def __str__(self) -> str:
        return str(self.value) if self.exact else repr(self.value)


ScaleLike = Union[Scale, int, Fraction, float]


def as_scale(s: ScaleLike) -> Scale:
    return s if isinstance(s, Scale) else Scale(s)
