"""Discrete Fourier analysis of canonical sequences.

Conventions: g_q = sum_n f_n exp(-2 pi i n q / L) and the inverse carries
the 1/L factor.  Everything here is float; exact arithmetic stops at the
correlation layer because roots of unity are irrational.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .correlate import acorr_aperiodic, acorr_periodic, is_canonical
from .errors import (
    BoundUndefined,
    DegenerateInput,
    InvalidLength,
    PoleSingularity,
    RotationFailure,
    SeriesUndefined,
    SynthesisFailure,
)
from .families import fib_half_length
from .fibpoly import fib_poly_prefix
from .numeric import NumericValue, ScaleLike, as_scale
from .sequence import Family, HuffmanSequence, elements_of


@dataclass(frozen=True, eq=False)
class Spectrum:
    bins: np.ndarray
    label: str = ""

    def __post_init__(self) -> None:
        object.__setattr__(self, "bins", np.asarray(self.bins, dtype=complex))

    @property
    def length(self) -> int:
        return len(self.bins)

    def magnitudes(self) -> np.ndarray:
        return np.abs(self.bins)

    def power(self) -> np.ndarray:
        return np.abs(self.bins) ** 2

    def symmetry_error(self) -> float:
        """max |g_{L-q} - conj(g_q)| relative to the largest bin."""
        g = self.bins
        scale = np.max(np.abs(g)) if g.size else 0.0
        if scale == 0:
            return 0.0
        mirrored = np.conj(g[(-np.arange(len(g))) % len(g)])
        return float(np.max(np.abs(g - mirrored)) / scale)

    def is_conjugate_symmetric(self, tol: float = 1e-9) -> bool:
        return self.symmetry_error() <= tol


def _as_vector(seq) -> np.ndarray:
    if isinstance(seq, np.ndarray) and np.iscomplexobj(seq):
        return seq.astype(complex)
    return np.array([float(v) for v in elements_of(seq)], dtype=complex)


def _kernel(L: int, sign: int) -> np.ndarray:
    n = np.arange(L)
    # reduce n*q mod L before scaling so phases stay accurate
    return np.exp(sign * 2j * np.pi * (np.outer(n, n) % L) / L)


def dft(seq: HuffmanSequence | Sequence | np.ndarray, label: str = "") -> Spectrum:
    """Direct O(L^2) forward transform."""
    x = _as_vector(seq)
    if x.size == 0:
        raise DegenerateInput("empty sequence")
    if not label and isinstance(seq, HuffmanSequence):
        label = seq.label or seq.family.value
    return Spectrum(_kernel(len(x), -1) @ x, label)


def idft(spec: Spectrum | np.ndarray) -> np.ndarray:
    g = spec.bins if isinstance(spec, Spectrum) else np.asarray(spec, dtype=complex)
    L = len(g)
    if L == 0:
        raise DegenerateInput("empty spectrum")
    return (_kernel(L, 1) @ g) / L


def element_sum_closed(N: int, s: ScaleLike) -> NumericValue:
    """S_N = F_{M+2}(s) + F_M(s), the zero-frequency bin of build_fib(N, s)."""
    M = fib_half_length(N)
    F = fib_poly_prefix(M + 2, as_scale(s).value)
    return F[M + 2] + F[M]


def _check_bin(q: int, L: int) -> None:
    if not 0 <= q < L:
        raise ValueError(f"bin index must lie in [0, {L}), got {q}")


def power_spectrum_closed(N: int, s: ScaleLike, q: int) -> float:
    """|DFT|^2 of build_fib(N, s) at bin q: S_N^2 + 4 sin^2(pi q / N)."""
    S = float(element_sum_closed(N, s))
    _check_bin(q, N)
    return S * S + 4.0 * math.sin(math.pi * q / N) ** 2


def dft_closed_cyclic(N: int, s: ScaleLike, q: int) -> complex:
    """Closed-form DFT bin of build_fib_cyclic(N, s).

    Bin 0 is returned as S_N directly; the prefactor is 0/0 there when s = 0.
    """
    S = float(element_sum_closed(N, s))
    _check_bin(q, N)
    if q == 0:
        return complex(S)
    sv = float(as_scale(s).value)
    w = 2j * math.sin(2 * math.pi * q / N)
    sign = -1 if q % 2 else 1
    return -(w + sv) / (w - sv) * (S + 2j * sign * math.sin(math.pi * q / N))


def _tangent_ratio(L: int, s: ScaleLike) -> tuple[float, float, int]:
    if L < 5 or L % 4 != 1:
        raise InvalidLength(f"tangent spectrum needs L = 4n+1 with L >= 5, got {L}")
    sv = as_scale(s).value
    if abs(sv) == 2:
        raise PoleSingularity("tangent family is singular at |s| = 2")
    n = (L - 1) // 4
    ratio = (2 + sv) / (2 - sv)
    # exact power when s is rational, then one rounding
    return float(sv), float(ratio**n - ratio ** (-n)), n


def tangent_spectrum(L: int, s: ScaleLike, q: int) -> complex:
    """Tangent-phasor spectrum bin q of length L = 4n+1.

    The prefactor -(2i tan + s)/(2i tan - s) is taken as +1 at q = 0.
    """
    sv, real_part, _ = _tangent_ratio(L, s)
    _check_bin(q, L)
    if q == 0:
        return complex(real_part)
    w = 2j * math.tan(2 * math.pi * q / L)
    sign = -1 if q % 2 else 1
    return -(w + sv) / (w - sv) * (real_part + 2j * sign * math.sin(math.pi * q / L))


def tangent_spectrum_bins(L: int, s: ScaleLike) -> Spectrum:
    _tangent_ratio(L, s)
    return Spectrum(np.array([tangent_spectrum(L, s, q) for q in range(L)]), f"tangent L={L} s={as_scale(s)}")


def magnitude_series_approx(N: int, s: ScaleLike, q: int, order: int = 5) -> float:
    """Partial sum (``order`` terms, 1..5) of the expansion of sqrt(S_N^2 + 4 sin^2(pi q/N))."""
    if not 1 <= order <= 5:
        raise ValueError(f"order must be 1..5, got {order}")
    S = abs(float(element_sum_closed(N, s)))
    if S == 0:
        raise SeriesUndefined("expansion needs a nonzero element sum (s != 0)")
    _check_bin(q, N)
    c = math.cos(2 * math.pi * q / N)
    sn2 = math.sin(math.pi * q / N) ** 2
    terms = [S, (1 - c) / S, -2 * sn2**2 / S**3, 4 * sn2**3 / S**5, -10 * sn2**4 / S**7]
    return math.fsum(terms[:order])


def _power_split(seq) -> tuple[float, np.ndarray]:
    """|g_q|^2 = P_0 + R_q from the periodic auto-correlation P (Wiener-Khinchin).

    Keeping the large constant P_0 apart from the small ripple R_q avoids the
    cancellation that swamps max|g| - min|g| once |g| is large.
    """
    per = acorr_periodic(seq)
    L = per.N
    n = np.arange(L)
    kernel = np.cos(2 * np.pi * (np.outer(n, n[1:]) % L) / L)
    ripple = kernel @ np.array([float(v) for v in per.values[1:]]) if L > 1 else np.zeros(1)
    return float(per.values[0]), ripple


def flatness(seq: HuffmanSequence | Sequence | Spectrum) -> float:
    """(max |g_q| - min |g_q|) / mean |g_q| over all bins.

    For a sequence the magnitudes come from its periodic auto-correlation, and
    the spread is formed as (R_max - R_min) / (|g_max| + |g_min|) so that
    near-flat spectra keep their relative accuracy.
    """
    if isinstance(seq, Spectrum):
        mags = seq.magnitudes()
        mean = float(np.mean(mags))
        if mean == 0:
            raise DegenerateInput("flatness of an all-zero spectrum is undefined")
        return float((np.max(mags) - np.min(mags)) / mean)
    p0, ripple = _power_split(seq)
    mags = np.sqrt(np.maximum(p0 + ripple, 0.0))
    mean = float(np.mean(mags))
    if mean == 0:
        raise DegenerateInput("flatness of an all-zero spectrum is undefined")
    hi, lo = int(np.argmax(ripple)), int(np.argmin(ripple))
    spread = (ripple[hi] - ripple[lo]) / (mags[hi] + mags[lo]) if mags[hi] + mags[lo] > 0 else 0.0
    return float(spread / mean)


def flatness_bound(N: int, s: ScaleLike) -> float:
    """Upper bound 2 / S_N^2 on the flatness of build_fib(N, s)."""
    S = float(element_sum_closed(N, s))
    if S == 0:
        raise BoundUndefined("flatness bound is undefined when the element sum is zero (s = 0)")
    return 2.0 / (S * S)


def _canonical_rotation(y: np.ndarray, ends_floor: float, rel_tol: float) -> int | None:
    for k in range(len(y)):
        z = np.roll(y, -k)
        if abs(z[0]) <= ends_floor or abs(z[-1]) <= ends_floor:
            continue
        if is_canonical(acorr_aperiodic(z), rel_tol).is_canonical:
            return k
    return None


def synthesize(
    spec: Spectrum,
    strip_zeros: bool = True,
    zero_tol: float = 1e-9,
    rel_tol: float = 1e-8,
    symmetry_tol: float = 1e-6,
) -> HuffmanSequence:
    """Turn a spectrum back into a canonical sequence.

    Steps: inverse DFT; find the cyclic offset at which every second element
    vanishes and drop those elements; then pick the rotation whose aperiodic
    auto-correlation is canonical.  The sign is fixed so the first element is
    positive.  ``rotation_offset`` is the index in the raw inverse transform
    that ends up first.
    """
    if spec.symmetry_error() > symmetry_tol:
        raise SynthesisFailure("spectrum is not conjugate-symmetric; inverse would be complex")
    x = idft(spec).real
    L = len(x)
    peak = float(np.max(np.abs(x)))
    if peak == 0:
        raise SynthesisFailure("inverse transform is identically zero")
    ends_floor = zero_tol * peak

    if strip_zeros:
        residuals = sorted(
            (float(np.max(np.abs(np.roll(x, -r)[1::2]), initial=0.0)) / peak, r) for r in range(L)
        )
        candidates = [(res, r) for res, r in residuals if res <= zero_tol]
        if not candidates:
            raise SynthesisFailure(
                f"no alternating zero class (best residual {residuals[0][0]:.3g} > {zero_tol:g})"
            )
    else:
        candidates = [(0.0, None)]

    for res, r in candidates:
        y = x if r is None else np.roll(x, -r)[0::2]
        k = _canonical_rotation(y, ends_floor, rel_tol)
        if k is None:
            continue
        z = np.roll(y, -k)
        if z[0] < 0:
            z = -z
        offset = k if r is None else (r + 2 * k) % L
        meta = {"zero_residual": res, "strip_offset": r, "spectrum_length": L}
        return HuffmanSequence(Family.CUSTOM, tuple(float(v) for v in z), None, offset, spec.label, meta)
    raise RotationFailure("no cyclic rotation has a canonical aperiodic auto-correlation")
