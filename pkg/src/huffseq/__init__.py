"""Canonical delta-correlated (Huffman) sequences built from Fibonacci polynomials."""

from .correlate import (
    CanonicalReport,
    CorrelationProfile,
    QualityMetrics,
    acorr_aperiodic,
    acorr_periodic,
    is_canonical,
    merit_closed_form,
    metrics,
    peak_closed_form,
    shifted_product,
)
from .errors import HuffmanError
from .families import (
    FIXTURE_NAMES,
    build,
    build_fib,
    build_fib_cyclic,
    build_int,
    build_tangent,
    build_three,
    fixture,
    fixtures,
)
from .fibpoly import IdentityCase, check_identity, fib_poly, fib_poly_prefix, golden_ratio
from .numeric import Scale
from .roots import ZeroReport, circle_fit, z_zeros, zero_report
from .sequence import Family, HuffmanSequence
from .spectral import (
    Spectrum,
    dft,
    dft_closed_cyclic,
    flatness,
    flatness_bound,
    idft,
    magnitude_series_approx,
    power_spectrum_closed,
    synthesize,
    tangent_spectrum,
    tangent_spectrum_bins,
)

__version__ = "0.1.0"
