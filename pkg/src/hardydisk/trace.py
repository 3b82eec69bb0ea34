"""Boundary traces of bounded holomorphic and harmonic data.

A trace estimate is built constructively from radial dilates: sample
f(r * exp(it)) on the grid for an increasing schedule of radii and keep
the last dilate.  No extrapolation is applied by default (no convergence
rate is asserted for the gap sequence of non-polynomial data; the gaps
are reported as-is).  Spectral inputs are dilated by the multiplier
r^|n|, which gives the two-sided (harmonic) dilation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .circle import convolve_poisson, norm, synthesize
from .extend import poisson_extend
from .grids import SpectralFunction, UnitGridFunction, grid_angles
from .kernel import DiskPoint
from .specs import TaylorSpec, boundary_values, evaluate, is_holo_spec, spec_product

__all__ = [
    "TraceResult",
    "DiskGrid",
    "default_radii",
    "default_testpoints",
    "radial_trace",
    "trace_spectrum",
    "weakstar_residual",
    "isometry_report",
    "product_trace_residual",
    "approx_identity_curve",
]

SUP_MONOTONE_TOL = 1e-12


@dataclass
class TraceResult:
    """Radial dilates of an interior function and the resulting trace.

    ``trace`` is the last dilate, ``cauchy_gaps[i]`` the grid L1 distance
    between dilates i and i+1, ``sup_norms[i]`` the grid sup of dilate i.
    Construction fails if the sup norms decrease beyond rounding, which
    would contradict the maximum modulus principle.
    """

    trace: UnitGridFunction
    radii: tuple
    cauchy_gaps: tuple
    sup_norms: tuple


def default_radii(count: int = 14) -> tuple:
    """Geometric schedule r_k = 1 - 2^-k, k = 1..count."""
    if int(count) != count or count < 1:
        raise ValueError(f"count must be a positive integer, got {count!r}")
    return tuple(1.0 - 0.5**k for k in range(1, int(count) + 1))


def default_testpoints(radii=(0.1, 0.3, 0.5, 0.7, 0.9), n_angles: int = 8) -> list:
    """Interior test points: each radius crossed with equispaced angles."""
    angles = grid_angles(n_angles)
    return [DiskPoint(r, s) for r in radii for s in angles]


def _check_radii(radii, minimum_len: int) -> tuple:
    rs = tuple(float(r) for r in radii)
    if len(rs) < minimum_len:
        raise ValueError(f"need at least {minimum_len} radii")
    if any(not 0.0 < r < 1.0 for r in rs):
        raise ValueError("radii must lie in (0, 1)")
    if any(r2 <= r1 for r1, r2 in zip(rs, rs[1:])):
        raise ValueError("radii must be strictly increasing")
    return rs


def _dilate(f, r: float, n: int) -> UnitGridFunction:
    if is_holo_spec(f):
        return UnitGridFunction(evaluate(f, r * np.exp(1j * grid_angles(n))))
    if isinstance(f, SpectralFunction):
        scaled = SpectralFunction(f.coeffs * np.power(r, np.abs(f.frequencies)))
        return synthesize(scaled, n)
    raise TypeError("f must be a holomorphic spec or a SpectralFunction")


def _interior_value(f, z: DiskPoint) -> complex:
    if is_holo_spec(f):
        return complex(evaluate(f, z.to_complex()))
    if isinstance(f, SpectralFunction):
        return poisson_extend(f, z)
    raise TypeError("f must be a holomorphic spec or a SpectralFunction")


def radial_trace(f, radii, n: int) -> TraceResult:
    """Radial dilates of f on the grid, with gap and sup diagnostics.

    ``f`` is a holomorphic spec (sampled as f(r exp(it))) or a
    SpectralFunction with interior meaning (dilated by r^|n|).  The trace
    estimate is the final dilate; for specs analytic across the closed
    disk it converges to the boundary restriction as the radii approach 1.
    """
    rs = _check_radii(radii, minimum_len=2)
    dilates = [_dilate(f, r, n) for r in rs]
    sup_norms = tuple(norm(d, "sup") for d in dilates)
    for i, (lo, hi) in enumerate(zip(sup_norms, sup_norms[1:])):
        if hi < lo - SUP_MONOTONE_TOL:
            raise ValueError(
                f"sup norm decreased from {lo} at r={rs[i]} to {hi} at r={rs[i + 1]}; "
                "maximum modulus check failed"
            )
    gaps = tuple(norm(d2 - d1, "l1") for d1, d2 in zip(dilates, dilates[1:]))
    return TraceResult(trace=dilates[-1], radii=rs, cauchy_gaps=gaps, sup_norms=sup_norms)


def trace_spectrum(f: TaylorSpec) -> SpectralFunction:
    """Exact trace coefficients of a polynomial: c_n = a_n for 0 <= n <= d.

    Polynomials restrict continuously to the circle, so the trace is the
    restriction itself and its spectrum is analytic-type.
    """
    if not isinstance(f, TaylorSpec):
        raise ValueError(f"trace_spectrum supports taylor specs only, got {type(f).__name__}")
    d = f.degree
    c = np.zeros(2 * d + 1, dtype=np.complex128)
    c[d:] = np.asarray(f.coeffs)
    return SpectralFunction(c)


def weakstar_residual(f, candidate: UnitGridFunction, testpoints) -> float:
    """Largest mismatch between the candidate's extension and f itself.

    Evaluates |extension of candidate at z - f(z)| over the test points;
    a vanishing residual certifies the candidate as the trace against the
    span of Poisson kernels attached to those points.
    """
    points = list(testpoints)
    if not points:
        raise ValueError("need at least one test point")
    if not all(isinstance(z, DiskPoint) for z in points):
        raise TypeError("testpoints must be DiskPoints")
    residuals = [abs(poisson_extend(candidate, z) - _interior_value(f, z)) for z in points]
    return float(max(residuals))


@dataclass(frozen=True)
class DiskGrid:
    """Polar sampling of the disk, radially refined toward the boundary.

    Radii follow 1 - 2^-j for j = 1..radial_levels; maxima of bounded
    analytic functions live near the boundary, so that is where the grid
    concentrates.
    """

    radial_levels: int = 14
    n_angles: int = 512


def isometry_report(f, trace: UnitGridFunction, disk_grid: DiskGrid | None = None) -> tuple:
    """Pair (sup over the disk, sup over the circle) for f and its trace.

    The disk estimate is a maximum of |f| over the polar grid, the circle
    estimate the grid sup of the trace.  The first never exceeds the
    second beyond rounding; they approach each other for specs analytic
    across the closed disk as the trace radius tends to 1.
    """
    grid = disk_grid or DiskGrid()
    radii = np.array(default_radii(grid.radial_levels))
    angles = grid_angles(grid.n_angles)
    if is_holo_spec(f):
        z = np.outer(radii, np.exp(1j * angles))
        values = evaluate(f, z)
    elif isinstance(f, SpectralFunction):
        freqs = f.frequencies
        basis = np.exp(1j * np.outer(angles, freqs))
        radial = np.power(radii[:, None], np.abs(freqs)[None, :]) * f.coeffs[None, :]
        values = radial @ basis.T
    else:
        raise TypeError("f must be a holomorphic spec or a SpectralFunction")
    sup_disk = float(np.max(np.abs(values)))
    sup_circle = norm(trace, "sup")
    return (sup_disk, sup_circle)


def product_trace_residual(f, g, n: int) -> float:
    """Multiplicativity defect of the trace: trace(fg) vs trace(f)*trace(g).

    The product spec is built structurally (coefficient convolution for
    polynomials, zero-list concatenation for Blaschke products) and, for
    polynomials, sampled through the spectral synthesis route, so the two
    sides of the comparison travel independent code paths.
    """
    fg = spec_product(f, g)
    t = grid_angles(n)
    if isinstance(fg, TaylorSpec) and n > 2 * fg.degree:
        lhs = synthesize(trace_spectrum(fg), n).samples
    else:
        lhs = boundary_values(fg, t)
    rhs = boundary_values(f, t) * boundary_values(g, t)
    return float(np.max(np.abs(lhs - rhs)))


def approx_identity_curve(g: UnitGridFunction, radii) -> list:
    """Grid L1 error of Poisson smoothing, per radius.

    Returns ``|| P_r * g - g ||_1`` for each radius, in order.  The
    spectral convolution route is pinned here: unlike kernel sampling it
    cannot under-resolve as r approaches 1 on a fixed grid.
    """
    rs = _check_radii(radii, minimum_len=1)
    return [norm(convolve_poisson(g, r, "spectral") - g, "l1") for r in rs]
