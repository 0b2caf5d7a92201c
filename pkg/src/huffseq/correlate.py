"""Aperiodic/periodic auto-correlation, the canonical test, and quality metrics."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import DegenerateInput, OutOfRangeShift, WrongMode
from .families import fib_half_length
from .fibpoly import fib_poly_prefix
from .numeric import NumericValue, ScaleLike, as_scale
from .sequence import HuffmanSequence, elements_of

APERIODIC = "aperiodic"
PERIODIC = "periodic"

DEFAULT_FLOAT_TOL = 1e-8


@dataclass(frozen=True)
class CorrelationProfile:
    """Auto-correlation values ordered by shift.

    Aperiodic profiles cover shifts -(N-1)..N-1; periodic ones cover 0..N-1.
    """

    mode: str
    values: tuple[NumericValue, ...]
    N: int
    end_product: NumericValue | None = None

    @property
    def shifts(self) -> range:
        if self.mode == APERIODIC:
            return range(-(self.N - 1), self.N)
        return range(self.N)

    @property
    def exact(self) -> bool:
        return all(isinstance(v, Fraction) for v in self.values)

    def value(self, d: int) -> NumericValue:
        if self.mode == APERIODIC:
            if abs(d) >= self.N:
                raise OutOfRangeShift(f"shift {d} outside +-{self.N - 1}")
            return self.values[d + self.N - 1]
        return self.values[d % self.N]

    @property
    def peak(self) -> NumericValue:
        return self.value(0)

    def floats(self) -> np.ndarray:
        return np.array([float(v) for v in self.values])


@dataclass(frozen=True)
class CanonicalReport:
    is_canonical: bool
    peak: NumericValue
    end_value: NumericValue
    max_interior_abs: NumericValue
    tolerance_used: float


@dataclass(frozen=True)
class QualityMetrics:
    merit_factor: NumericValue
    peak_ratio: NumericValue
    spectral_flatness: float


def _exact_correlation(elems: Sequence[Fraction]) -> list[Fraction]:
    # clear denominators and correlate integers; much faster than Fraction products
    den = 1
    for x in elems:
        den = math.lcm(den, x.denominator)
    ints = [int(x * den) for x in elems]
    N = len(ints)
    half = [sum(a * b for a, b in zip(ints, ints[d:])) for d in range(N)]
    d2 = den * den
    full = half[:0:-1] + half
    return [Fraction(v, d2) for v in full]


def acorr_aperiodic(seq: HuffmanSequence | Sequence) -> CorrelationProfile:
    """A_d = sum_i e_i e_{i+d} with zero padding, for d = -(N-1)..N-1."""
    elems = elements_of(seq)
    N = len(elems)
    if N == 0:
        raise DegenerateInput("empty sequence")
    if all(isinstance(x, Fraction) for x in elems):
        values = _exact_correlation(elems)
    else:
        x = np.array([float(v) for v in elems])
        values = [float(v) for v in np.correlate(x, x, mode="full")]
    return CorrelationProfile(APERIODIC, tuple(values), N, elems[0] * elems[-1])


def acorr_periodic(seq: HuffmanSequence | Sequence) -> CorrelationProfile:
    """Cyclic auto-correlation, obtained by folding the aperiodic profile mod N."""
    ap = acorr_aperiodic(seq)
    N = ap.N
    values = [ap.value(0)] + [ap.value(d) + ap.value(d - N) for d in range(1, N)]
    return CorrelationProfile(PERIODIC, tuple(values), N, ap.end_product)


def shifted_product(seq: HuffmanSequence | Sequence, d: int) -> list[NumericValue]:
    """Products e_i * e_{i+d} over the overlap of the sequence with its d-shifted copy."""
    elems = elements_of(seq)
    N = len(elems)
    if abs(d) >= N:
        raise OutOfRangeShift(f"|d| must be < {N}, got {d}")
    if d >= 0:
        return [a * b for a, b in zip(elems, elems[d:])]
    return [a * b for a, b in zip(elems[-d:], elems)]


def is_canonical(profile: CorrelationProfile, rel_tol: float | None = None) -> CanonicalReport:
    """Check for the form [a, 0, ..., 0, A_0, 0, ..., 0, a].

    ``rel_tol`` bounds interior magnitudes relative to the peak.  By default
    exact profiles must have literal zeros and float profiles get 1e-8.
    """
    if profile.mode != APERIODIC:
        raise WrongMode("canonical test needs an aperiodic profile")
    N = profile.N
    exact = profile.exact
    if rel_tol is None:
        rel_tol = 0.0 if exact else DEFAULT_FLOAT_TOL
    peak = profile.peak
    end = profile.value(N - 1)
    interior = [abs(profile.value(d)) for d in range(-(N - 2), N - 1) if d != 0]
    max_interior = max(interior, default=peak * 0)
    if exact:
        bound = Fraction(rel_tol) * abs(peak)
    else:
        bound = rel_tol * abs(float(peak))
    ok = max_interior <= bound
    other_end = profile.value(-(N - 1))
    if profile.end_product is not None:
        target = abs(profile.end_product)
        for v in (end, other_end):
            if exact and isinstance(target, Fraction):
                ok = ok and abs(v) == target
            else:
                ok = ok and math.isclose(abs(float(v)), abs(float(target)), rel_tol=1e-12, abs_tol=bound)
    return CanonicalReport(bool(ok), peak, end, max_interior, float(rel_tol))


def peak_closed_form(N: int, s: ScaleLike) -> NumericValue:
    """A_0 = 2 + s^2 F_{M+1}^2 + 4 F_M F_{M+2} for the Fibonacci family."""
    M = fib_half_length(N)
    sv = as_scale(s).value
    F = fib_poly_prefix(M + 2, sv)
    return 2 + sv * sv * F[M + 1] ** 2 + 4 * F[M] * F[M + 2]


def merit_closed_form(N: int, s: ScaleLike) -> NumericValue:
    """Merit factor A_0^2 / 2 of a canonical array with unit end products."""
    return peak_closed_form(N, s) ** 2 / 2


def metrics(seq: HuffmanSequence | Sequence) -> QualityMetrics:
    """Merit factor, peak-to-off-peak ratio and spectral flatness.

    A pure delta has no off-peak energy; both ratios are then ``math.inf``.
    """
    from .spectral import flatness

    elems = elements_of(seq)
    if len(elems) < 2:
        raise DegenerateInput("metrics need at least two elements")
    if all(x == 0 for x in elems):
        raise DegenerateInput("all-zero sequence")
    prof = acorr_aperiodic(elems)
    peak = prof.peak
    off = [prof.value(d) for d in prof.shifts if d != 0]
    energy = sum((v * v for v in off), peak * 0)
    worst = max(abs(v) for v in off)
    merit = peak * peak / energy if energy else math.inf
    ratio = peak / worst if worst else math.inf
    return QualityMetrics(merit, ratio, flatness(elems))
