import math

import mpmath
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from huffseq import build_fib, build_tangent, build_three, circle_fit, fixture, z_zeros, zero_report
from huffseq.errors import DegeneratePolynomial, RootAccuracy
from huffseq.roots import residual_ratio

PHI = (1 + math.sqrt(5)) / 2


def mp_roots(coeffs):
    """Independent oracle: Durand-Kerner in 50-digit arithmetic."""
    with mpmath.workdps(50):
        return np.array([complex(r) for r in mpmath.polyroots([float(c) for c in coeffs], maxsteps=400, extraprec=200)])


def match_sets(a, b):
    a, b = list(a), list(b)
    worst = 0.0
    for z in a:
        j = min(range(len(b)), key=lambda k: abs(b[k] - z))
        worst = max(worst, abs(b.pop(j) - z) / max(1.0, abs(z)))
    return worst


def test_linear_root():
    z = z_zeros([1, -3])
    assert len(z) == 1
    assert z[0] == pytest.approx(3)


@pytest.mark.parametrize("seq", [[0, 1, 2], [1, 2, 0], [5], [0]])
def test_degenerate_polynomial(seq):
    with pytest.raises(DegeneratePolynomial):
        z_zeros(seq)


def test_degenerate_error_code():
    with pytest.raises(DegeneratePolynomial) as exc:
        z_zeros([0, 0, 0, 1, 0])
    assert exc.value.code == "degenerate-polynomial"


def test_root_accuracy_guard():
    with pytest.raises(RootAccuracy):
        z_zeros([1, 2, 3, 4], tol=-1.0)


@pytest.mark.parametrize("N", [7, 11, 15, 19, 23])
def test_fib_roots_against_mpmath(N):
    seq = build_fib(N, 1)
    z = z_zeros(seq)
    assert len(z) == N - 1
    assert match_sets(z, mp_roots(seq.floats())) < 1e-9


@pytest.mark.parametrize("N", [7, 11, 15, 19])
def test_fib_radii_are_golden(N):
    z = z_zeros(build_fib(N, 1))
    r = np.abs(z)
    dev = np.minimum(np.abs(r - PHI), np.abs(r - 1 / PHI))
    assert np.max(dev) < 1e-6


def test_fib11_report():
    rep = zero_report(build_fib(11, 1))
    assert [c.count for c in rep.radii_clusters] == [5, 5]
    assert rep.radii_clusters[0].radius == pytest.approx(1 / PHI, abs=1e-6)
    assert rep.radii_clusters[1].radius == pytest.approx(PHI, abs=1e-6)
    assert rep.equi_angular
    assert rep.reciprocal_radii
    assert rep.base_gap == pytest.approx(2 * math.pi / 10)
    assert sum(c.count for c in rep.radii_clusters) == len(rep.roots) == 10


@pytest.mark.parametrize("N", [7, 11, 15, 19])
def test_fib_per_circle_gaps_are_multiples_of_base(N):
    rep = zero_report(build_fib(N, 1))
    for gaps in rep.angle_gaps:
        ratio = np.array(gaps) / rep.base_gap
        assert np.max(np.abs(ratio - np.round(ratio))) < 1e-6
        assert sum(gaps) == pytest.approx(2 * math.pi)


def test_fib_per_circle_gaps_are_not_all_equal():
    # the combined root set is equi-angular; single circles are not
    rep = zero_report(build_fib(11, 1))
    for gaps in rep.angle_gaps:
        assert max(gaps) - min(gaps) > 1.0


@pytest.mark.parametrize("N", [5, 7, 9])
def test_three_radii(N):
    z = z_zeros(build_three(N))
    r = np.abs(z)
    assert len(z) == N - 1
    assert np.max(np.minimum(np.abs(r - 3), np.abs(r - 1 / 3))) < 1e-6
    assert zero_report(build_three(N)).equi_angular


def test_three5_roots_against_mpmath():
    seq = build_three(5)
    assert match_sets(z_zeros(seq), mp_roots(seq.floats())) < 1e-9


def test_fourth_roots_of_unity():
    rep = circle_fit([1, 1j, -1, -1j])
    assert len(rep.radii_clusters) == 1
    assert rep.radii_clusters[0].radius == pytest.approx(1)
    assert rep.radii_clusters[0].count == 4
    assert np.allclose(rep.angle_gaps[0], [math.pi / 2] * 4)
    assert rep.equi_angular


def test_circle_fit_single_root():
    rep = circle_fit([2.0])
    assert rep.angle_gaps == ((2 * math.pi,),)
    assert rep.equi_angular


def test_circle_fit_flags_uneven_angles():
    rep = circle_fit([1, np.exp(0.3j), -1])
    assert not rep.equi_angular
    assert rep.max_angle_dev > 0.1


def test_circle_fit_empty():
    with pytest.raises(ValueError):
        circle_fit([])


def test_h_non_11_radii_match_fib():
    a = sorted(c.radius for c in zero_report(fixture("H_non_11")).radii_clusters)
    b = sorted(c.radius for c in zero_report(build_fib(11, 1)).radii_clusters)
    assert np.allclose(a, b, atol=1e-6)


@pytest.mark.parametrize("s", [1, 3, -1, -5, 7])
def test_tangent_two_reciprocal_circles(s):
    rep = zero_report(build_tangent(13, s))
    assert len(rep.radii_clusters) == 2
    assert rep.reciprocal_radii
    assert rep.equi_angular
    # measured radius matches |(2+s)/(2-s)| on these cases
    X = abs((2 + s) / (2 - s))
    radii = sorted(c.radius for c in rep.radii_clusters)
    assert radii == pytest.approx(sorted([X, 1 / X]), rel=1e-9)


def test_report_json_shape():
    js = zero_report(build_fib(7, 1)).to_json()
    assert set(js) >= {"roots", "radii_clusters", "angle_gaps", "max_radius_dev", "max_angle_dev"}
    assert len(js["roots"]) == 6


@given(st.lists(st.integers(-9, 9).filter(bool), min_size=2, max_size=12))
def test_roots_satisfy_residual_bound(coeffs):
    z = z_zeros(coeffs, tol=1e-6)
    assert len(z) == len(coeffs) - 1
    assert np.max(residual_ratio(np.array(coeffs, float), z)) <= 1e-6
