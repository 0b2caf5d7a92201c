from __future__ import annotations

import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from huffseq import (
    acorr_aperiodic,
    acorr_periodic,
    build_fib,
    build_fib_cyclic,
    build_int,
    fixture,
    is_canonical,
    merit_closed_form,
    metrics,
    peak_closed_form,
    shifted_product,
)
from huffseq.correlate import CorrelationProfile
from huffseq.errors import DegenerateInput, InvalidLength, OutOfRangeShift, WrongMode

from conftest import FIB_LENGTHS, brute_acorr

small_ints = st.lists(st.integers(-20, 20), min_size=1, max_size=25)
small_floats = st.lists(st.floats(-1e3, 1e3, allow_nan=False), min_size=1, max_size=25)


def test_fib7_profile():
    prof = acorr_aperiodic(build_fib(7, 1))
    assert list(prof.values) == [-1, 0, 0, 0, 0, 0, 18, 0, 0, 0, 0, 0, -1]
    assert list(prof.shifts) == list(range(-6, 7))
    assert prof.exact


def test_single_element():
    assert list(acorr_aperiodic([1]).values) == [1]
    assert is_canonical(acorr_aperiodic([1])).is_canonical


def test_int_4_3_profile():
    assert list(acorr_aperiodic(build_int(4, 3)).values) == [-27, 0, 0, 730, 0, 0, -27]


def test_periodic_examples():
    assert list(acorr_periodic(build_fib(7, 1)).values) == [18, -1, 0, 0, 0, 0, -1]
    assert acorr_periodic(build_fib_cyclic(7, 1)).values == acorr_periodic(build_fib(7, 1)).values
    assert list(acorr_periodic([1, 0, 0]).values) == [1, 0, 0]


@given(small_ints)
def test_exact_path_matches_brute_force(xs):
    xs = [Fraction(x, 3) for x in xs]
    assert list(acorr_aperiodic(xs).values) == brute_acorr(xs)


@given(small_floats)
def test_float_path_matches_brute_force(xs):
    got = acorr_aperiodic(xs).floats()
    want = np.array(brute_acorr(xs), dtype=float)
    scale = max(1.0, float(np.max(np.abs(want))))
    assert np.max(np.abs(got - want)) <= 1e-12 * scale


@given(small_ints)
def test_aperiodic_is_even(xs):
    prof = acorr_aperiodic(xs)
    assert all(prof.value(d) == prof.value(-d) for d in range(prof.N))


@given(small_ints)
def test_periodic_is_folded_aperiodic(xs):
    N = len(xs)
    ap = brute_acorr(xs)
    folded = [sum(ap[k + N - 1] for k in range(-(N - 1), N) if k % N == d) for d in range(N)]
    assert list(acorr_periodic(xs).values) == folded
    direct = [sum(xs[i] * xs[(i + d) % N] for i in range(N)) for d in range(N)]
    assert folded == direct


@given(small_ints, st.data())
def test_shifted_product_sums_to_correlation(xs, data):
    N = len(xs)
    d = data.draw(st.integers(-(N - 1), N - 1))
    assert sum(shifted_product(xs, d)) == acorr_aperiodic(xs).value(d)


def test_shifted_product_fig1():
    half = [v / 2 for v in build_fib(15, 1)]
    p1 = shifted_product(half, 1)
    assert sum(p1) == 0
    assert p1 == [-v for v in reversed(p1)]  # anti-symmetric about the centre
    p2 = shifted_product(half, 2)
    assert sum(p2) == 0
    assert p2 != [-v for v in reversed(p2)]
    assert shifted_product([1, -2, 3], 0) == [1, 4, 9]
    with pytest.raises(OutOfRangeShift):
        shifted_product([1, 2, 3], 3)


def test_is_canonical_examples():
    rep = is_canonical(acorr_aperiodic(build_fib(15, 1)))
    assert rep.is_canonical and rep.peak == 843 and rep.end_value == -1
    assert rep.tolerance_used == 0.0
    rep13 = is_canonical(acorr_aperiodic(fixture("H_non_13")))
    assert rep13.is_canonical and rep13.end_value == 1
    rep_ones = is_canonical(acorr_aperiodic([1, 1, 1]))
    assert not rep_ones.is_canonical and rep_ones.max_interior_abs == 2


def test_is_canonical_rejects_periodic():
    with pytest.raises(WrongMode):
        is_canonical(acorr_periodic([1, 2, 3]))


def test_float_tolerance_default_and_override():
    seq = build_fib(15, 1).floats()
    seq[3] += 1e-6
    prof = acorr_aperiodic(seq)
    assert not is_canonical(prof).is_canonical
    assert is_canonical(prof, rel_tol=1e-6).is_canonical


def test_exact_nonzero_tolerance():
    prof = acorr_aperiodic([Fraction(1), Fraction(1, 10), Fraction(1, 10), Fraction(-1)])  # shift-1 value 1/100
    assert not is_canonical(prof).is_canonical
    assert is_canonical(prof, rel_tol=0.01).is_canonical


def test_end_mismatch_detected():
    prof = CorrelationProfile("aperiodic", tuple(Fraction(v) for v in (-1, 0, 5, 0, -1)), 3, Fraction(-2))
    assert not is_canonical(prof).is_canonical


@pytest.mark.parametrize("N, expected", [(7, 18), (15, 843), (11, 123)])
def test_peak_closed_form_examples(N, expected):
    assert peak_closed_form(N, 1) == expected
    assert sum(v * v for v in build_fib(N, 1)) == expected


def test_peak_closed_form_invalid():
    with pytest.raises(InvalidLength):
        peak_closed_form(9, 1)


@pytest.mark.parametrize("N", FIB_LENGTHS)
@pytest.mark.parametrize("s", [Fraction(-7, 3), -1, Fraction(1, 4), 2, 3])
def test_fib_canonical_and_reconciliation(N, s):
    seq = build_fib(N, s)
    prof = acorr_aperiodic(seq)
    a0 = peak_closed_form(N, s)
    assert list(prof.values) == [-1] + [0] * (N - 2) + [a0] + [0] * (N - 2) + [-1]
    assert sum(seq) ** 2 == a0 - 2
    m = metrics(seq)
    assert m.merit_factor == a0**2 / 2 == merit_closed_form(N, s)
    assert m.peak_ratio == a0


def test_metrics_examples():
    m = metrics(build_fib(15, 1))
    assert m.merit_factor == Fraction(843**2, 2) == 355324.5
    assert m.peak_ratio == 843
    non = metrics(fixture("H_non_11"))
    ref = metrics(build_fib(11, 1))
    assert (non.merit_factor, non.peak_ratio) == (ref.merit_factor, ref.peak_ratio)
    delta = metrics([1, 0, 0, 0])
    assert delta.peak_ratio == math.inf and delta.merit_factor == math.inf
    assert delta.spectral_flatness == 0


def test_metrics_degenerate():
    with pytest.raises(DegenerateInput):
        metrics([0, 0, 0])
    with pytest.raises(DegenerateInput):
        metrics([5])


def test_metrics_nonnegative_for_random():
    rng = np.random.default_rng(4)
    for _ in range(20):
        m = metrics(rng.normal(size=9))
        assert m.merit_factor >= 0 and m.peak_ratio >= 0 and m.spectral_flatness >= 0
