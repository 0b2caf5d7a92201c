"""Constructors for the canonical sequence families and stored fixtures."""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import DegenerateScale, InvalidLength
from .fibpoly import fib_poly_prefix
from .numeric import ScaleLike, as_scale
from .sequence import Family, HuffmanSequence


def fib_half_length(N: int) -> int:
    """M = (N - 3) / 2 for a valid Fibonacci-family length N = 4n + 3, n >= 1."""
    if N < 7 or N % 4 != 3:
        raise InvalidLength(f"Fibonacci family needs N = 4n+3 with N >= 7, got {N}")
    return (N - 3) // 2


def build_fib(N: int, s: ScaleLike) -> HuffmanSequence:
    """[1, 2sF_1, ..., 2sF_M, sF_{M+1} - 2F_M, 2sF_{-M}, ..., 2sF_{-1}, -1].

    Valid for every real s, including s = 0 where it collapses to
    [1, 0, ..., 0, -1].
    """
    M = fib_half_length(N)
    scale = as_scale(s)
    sv = scale.value
    F = fib_poly_prefix(M + 1, sv)
    one = sv * 0 + 1
    left = [2 * sv * F[k] for k in range(1, M + 1)]
    middle = sv * F[M + 1] - 2 * F[M]
    # F_{-k} = (-1)^{k+1} F_k
    right = [2 * sv * F[k] * (1 if k % 2 else -1) for k in range(M, 0, -1)]
    elements = (one, *left, middle, *right, -one)
    return HuffmanSequence(Family.FIB, elements, scale)


def build_fib_cyclic(N: int, s: ScaleLike) -> HuffmanSequence:
    """build_fib rotated so that the middle term comes first."""
    base = build_fib(N, s)
    rotated = base.rotated((N - 1) // 2)
    return HuffmanSequence(Family.FIB_CYCLIC, rotated.elements, base.scale, rotated.rotation_offset)


def build_int(N: int, s: ScaleLike) -> HuffmanSequence:
    """[s, (s^2-1), (s^2-1)s, ..., (s^2-1)s^{N-3}, -s^{N-2}].

    Off-peak correlation is -s^{N-1} at the two end shifts and zero elsewhere.
    """
    if N < 3:
        raise InvalidLength(f"integer family needs N >= 3, got {N}")
    scale = as_scale(s)
    sv = scale.value
    if sv == 0:
        raise DegenerateScale("integer family is undefined at s = 0")
    body = [(sv * sv - 1) * sv**k for k in range(N - 2)]
    return HuffmanSequence(Family.INT, (sv, *body, -(sv ** (N - 2))), scale)


def build_three(N: int) -> HuffmanSequence:
    """Powers-of-three family: [3, 8, 24, ..., x, ..., 8/27, 8/9, -1/3].

    The middle term is 3^{(3-N)/2} - 3^{(N-3)/2}, the value that cancels the
    shift-2 correlation.
    """
    if N < 5 or N % 2 == 0:
        raise InvalidLength(f"three family needs odd N >= 5, got {N}")
    three = Fraction(3)
    h = (N - 3) // 2
    left = [8 * three ** (j - 1) for j in range(1, h + 1)]
    right = [8 * three ** (-k - 1) for k in range(h, 0, -1)]
    middle = three ** (-h) - three**h
    return HuffmanSequence(Family.THREE, (three, *left, middle, *right, Fraction(-1, 3)))


def build_tangent(L: int, s: ScaleLike) -> HuffmanSequence:
    """Invert the tangent-phasor spectrum of length L = 4n+1 into a length 2n+1 sequence."""
    from .spectral import synthesize, tangent_spectrum_bins

    scale = as_scale(s)
    spec = tangent_spectrum_bins(L, scale)
    seq = synthesize(spec)
    return HuffmanSequence(
        Family.TANGENT, seq.elements, scale, seq.rotation_offset, meta=dict(seq.meta, spectrum_length=L)
    )


def _h_non_9() -> tuple[float, ...]:
    r = math.sqrt(10002)
    return (
        1.0,
        200.0,
        100 * (200 - 2 * r),
        100 * (-2 - 400 * r),
        -4000000 * r,
        100 * (-2 + 400 * r),
        100 * (-200 - 2 * r),
        200.0,
        -1.0,
    )


_FIXTURES = {
    "H_non_11": (1, 1, 3, 4, 2, 6, -7, -1, 2, 1, -1),
    "H_non_9": None,
    "H_non_13": (1, 4, 8, 14, 24, 20, -14, -20, 24, -14, 8, -4, 1),
}

FIXTURE_NAMES = tuple(_FIXTURES)


def fixture(name: str) -> HuffmanSequence:
    if name not in _FIXTURES:
        raise KeyError(f"unknown fixture {name!r}; choose from {', '.join(FIXTURE_NAMES)}")
    values = _FIXTURES[name] if _FIXTURES[name] is not None else _h_non_9()
    return HuffmanSequence(Family.FIXTURE, values, label=name)


def fixtures() -> list[HuffmanSequence]:
    """Non-Fibonacci canonical arrays, stored verbatim."""
    return [fixture(name) for name in FIXTURE_NAMES]


def build(family: str | Family, N: int | None = None, s: ScaleLike | None = None) -> HuffmanSequence:
    """Dispatch to a family constructor by name."""
    family = Family(family)
    if family is Family.FIXTURE or family is Family.CUSTOM:
        raise ValueError(f"{family.value} sequences are not built from (N, s)")
    if N is None:
        raise InvalidLength("a length is required")
    if family is Family.THREE:
        return build_three(N)
    if s is None:
        raise DegenerateScale(f"family {family.value} needs a scale")
    return {
        Family.FIB: build_fib,
        Family.FIB_CYCLIC: build_fib_cyclic,
        Family.INT: build_int,
        Family.TANGENT: build_tangent,
    }[family](N, s)
