"""z-transform zeros and their two-circle, equi-angular layout."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DegeneratePolynomial, RootAccuracy
from .sequence import HuffmanSequence, elements_of

TWO_PI = 2 * math.pi


def _coefficients(seq) -> np.ndarray:
    c = np.array([float(v) for v in elements_of(seq)])
    if c.size < 2:
        raise DegeneratePolynomial("need at least two elements for a nonconstant polynomial")
    if c[0] == 0 or c[-1] == 0:
        raise DegeneratePolynomial("first and last elements must be nonzero")
    return c


def residual_ratio(coeffs: np.ndarray, z: np.ndarray) -> np.ndarray:
    """|p(z)| / sum_k |c_k| |z|^k for each root."""
    scale = np.polyval(np.abs(coeffs), np.abs(z))
    return np.abs(np.polyval(coeffs, z)) / scale


def z_zeros(seq: HuffmanSequence | Sequence, tol: float = 1e-8) -> np.ndarray:
    """Roots of sum_i e_{i+1} z^{N-1-i} (first element is the leading coefficient)."""
    c = _coefficients(seq)
    z = np.roots(c)
    dc = np.polyder(c)
    for _ in range(3):
        step = np.polyval(c, z) / np.polyval(dc, z)
        better = np.isfinite(step)
        z_new = np.where(better, z - np.where(better, step, 0), z)
        keep = residual_ratio(c, z_new) <= residual_ratio(c, z)
        z = np.where(keep, z_new, z)
    worst = float(np.max(residual_ratio(c, z)))
    if worst > tol:
        raise RootAccuracy(f"root residual {worst:.3g} exceeds {tol:g}")
    return z


@dataclass(frozen=True)
class RadiusCluster:
    radius: float
    count: int


@dataclass(frozen=True)
class ZeroReport:
    roots: tuple[complex, ...]
    radii_clusters: tuple[RadiusCluster, ...]
    angle_gaps: tuple[tuple[float, ...], ...]
    max_radius_dev: float
    max_angle_dev: float
    base_gap: float
    equi_angular: bool
    reciprocal_radii: bool

    def to_json(self) -> dict:
        return {
            "roots": [[z.real, z.imag] for z in self.roots],
            "radii_clusters": [{"radius": c.radius, "count": c.count} for c in self.radii_clusters],
            "angle_gaps": [list(g) for g in self.angle_gaps],
            "max_radius_dev": self.max_radius_dev,
            "max_angle_dev": self.max_angle_dev,
            "base_gap": self.base_gap,
            "equi_angular": self.equi_angular,
            "reciprocal_radii": self.reciprocal_radii,
        }


def _cyclic_gaps(angles: np.ndarray) -> np.ndarray:
    a = np.sort(np.mod(angles, TWO_PI))
    if a.size == 1:
        return np.array([TWO_PI])
    return np.append(np.diff(a), TWO_PI - (a[-1] - a[0]))


def circle_fit(roots: Sequence[complex], radius_tol: float = 1e-6, angle_tol: float = 1e-6) -> ZeroReport:
    """Group roots into circles by modulus and measure their angular spacing.

    The full set of K roots is equi-angular when its sorted arguments are
    spaced 2*pi/K apart.  Within one circle the gaps are then integer
    multiples of that base gap; ``max_angle_dev`` covers both checks.
    """
    z = np.asarray(roots, dtype=complex)
    if z.size == 0:
        raise ValueError("circle_fit needs at least one root")
    order = np.argsort(np.abs(z), kind="stable")
    z = z[order]
    r = np.abs(z)

    groups: list[list[int]] = [[0]]
    for i in range(1, len(z)):
        prev = r[groups[-1][-1]]
        if r[i] - prev <= radius_tol * max(prev, np.finfo(float).tiny):
            groups[-1].append(i)
        else:
            groups.append([i])

    base = TWO_PI / len(z)
    devs = [np.abs(_cyclic_gaps(np.angle(z)) - base)]
    clusters, gaps, rdev = [], [], 0.0
    for g in groups:
        radius = float(np.mean(r[g]))
        clusters.append(RadiusCluster(radius, len(g)))
        if radius > 0:
            rdev = max(rdev, float(np.max(np.abs(r[g] - radius)) / radius))
        cg = _cyclic_gaps(np.angle(z[g]))
        gaps.append(tuple(float(x) for x in cg))
        devs.append(np.abs(cg - np.round(cg / base) * base))
    max_angle_dev = float(max(np.max(d) for d in devs))

    radii = sorted(c.radius for c in clusters)
    reciprocal = all(abs(a * b - 1.0) <= 2 * radius_tol for a, b in zip(radii, reversed(radii)))
    return ZeroReport(
        tuple(complex(v) for v in z),
        tuple(clusters),
        tuple(gaps),
        rdev,
        max_angle_dev,
        base,
        max_angle_dev <= angle_tol,
        reciprocal,
    )


def zero_report(seq, radius_tol: float = 1e-6, angle_tol: float = 1e-6) -> ZeroReport:
    return circle_fit(z_zeros(seq), radius_tol, angle_tol)
