"""Interior harmonic extension of boundary data, and its verifiers.

The extension of boundary data f at an interior point z is the normalized
integral of f against the Poisson kernel seen from z.  Grid data is
extended by the trapezoid rule; spectral data by the multiplier r^|n|,
evaluated as two Horner passes (one per frequency sign) for stability and
O(M) cost.

Only the unit disk is implemented: the extension formula on a general
disk D(a, R) reduces to this case by the affine substitution
``z = a + R*w``, which is a remark for callers, not a tested operation.
"""

from __future__ import annotations

import numpy as np

from .grids import BidiskSpectrum, SpectralFunction, UnitGridFunction, grid_angles
from .kernel import DiskPoint, eval_kernel
from .specs import HoloSpec, evaluate, is_holo_spec

__all__ = [
    "poisson_extend",
    "reproduce_interior",
    "check_harmonic",
    "bidisk_extend",
    "BidiskSpectrum",
]


def _horner_tail(coeffs: np.ndarray, w: complex) -> complex:
    """sum_j coeffs[j] * w^(j+1) by Horner; coeffs[j] belongs to power j+1."""
    acc = 0j
    for a in reversed(coeffs):
        acc = (acc + a) * w
    return acc


def poisson_extend(boundary, z: DiskPoint) -> complex:
    """Value at z of the harmonic extension of the given boundary data.

    Grid input: trapezoid quadrature of the defining integral.  Spectral
    input: sum_n c_n r^|n| exp(i n sigma).  The two routes agree within
    the trapezoid aliasing bound on band-limited data.
    """
    if not isinstance(z, DiskPoint):
        raise TypeError("z must be a DiskPoint")
    if isinstance(boundary, UnitGridFunction):
        weights = eval_kernel(z.r, z.sigma - boundary.angles)
        return complex(np.dot(boundary.samples, weights) / boundary.n)
    if isinstance(boundary, SpectralFunction):
        m = boundary.m
        c = boundary.coeffs
        w = complex(z.to_complex())
        positive = _horner_tail(c[m + 1 :], w)
        negative = _horner_tail(c[:m][::-1], np.conj(w))
        return complex(c[m] + positive + negative)
    raise TypeError("boundary must be a UnitGridFunction or SpectralFunction")


def reproduce_interior(f: HoloSpec, z: DiskPoint, rho: float = 1.0, n: int = 4096) -> float:
    """Residual of the interior reproduction identity for holomorphic data.

    Compares f(z) against the n-point quadrature of the dilated boundary
    values f(rho * exp(it)) weighted by the kernel of radius z.r / rho.
    Requires z.r < rho <= 1; rho = 1 is legitimate exactly because every
    holomorphic spec here is analytic across the closed disk.
    """
    if not isinstance(z, DiskPoint):
        raise TypeError("z must be a DiskPoint")
    if not is_holo_spec(f):
        raise TypeError("f must be a holomorphic spec")
    rho = float(rho)
    if not z.r < rho <= 1.0:
        raise ValueError(f"dilation must satisfy z.r < rho <= 1, got rho={rho} with z.r={z.r}")
    t = grid_angles(n)
    dilated = evaluate(f, rho * np.exp(1j * t))
    weights = eval_kernel(z.r / rho, z.sigma - t)
    integral = np.dot(dilated, weights) / int(n)
    return float(abs(evaluate(f, z.to_complex()) - integral))


def check_harmonic(boundary: SpectralFunction, a: DiskPoint, radius: float, m: int) -> float:
    """Mean-value residual of the extension over a circle inside the disk.

    Returns |F(a) - mean of F over m points of the circle of the given
    radius about a|, F being the Poisson extension.  The discrete mean is
    exact (up to rounding) once m exceeds the bandwidth of F restricted to
    the circle, so harmonic extensions drive this to machine precision.
    """
    if not isinstance(boundary, SpectralFunction):
        raise TypeError("boundary must be a SpectralFunction")
    if not isinstance(a, DiskPoint):
        raise TypeError("a must be a DiskPoint")
    radius = float(radius)
    if radius <= 0.0 or a.r + radius >= 1.0:
        raise ValueError(f"circle of radius {radius} about |a|={a.r} is not contained in the disk")
    if int(m) != m or m < 16:
        raise ValueError(f"need an integer m >= 16 quadrature points, got {m!r}")
    center = poisson_extend(boundary, a)
    phis = (2.0 * np.pi / int(m)) * np.arange(int(m))
    points = a.to_complex() + radius * np.exp(1j * phis)
    ring = np.array([poisson_extend(boundary, DiskPoint.from_complex(p)) for p in points])
    return float(abs(center - ring.mean()))


def bidisk_extend(spec: BidiskSpectrum, z1: DiskPoint, z2: DiskPoint) -> complex:
    """Tensor Poisson extension on the bidisk.

    Scales coefficient c_{m,n} by r1^|m| r2^|n| and evaluates the double
    series at (sigma1, sigma2).  Spectral-only; the iterated 2-d
    quadrature exists purely as a test oracle.
    """
    if not isinstance(spec, BidiskSpectrum):
        raise TypeError("spec must be a BidiskSpectrum")
    if not (isinstance(z1, DiskPoint) and isinstance(z2, DiskPoint)):
        raise TypeError("z1 and z2 must be DiskPoints")
    m = np.arange(-spec.m1, spec.m1 + 1)
    n = np.arange(-spec.m2, spec.m2 + 1)
    u = np.power(z1.r, np.abs(m)) * np.exp(1j * m * z1.sigma)
    v = np.power(z2.r, np.abs(n)) * np.exp(1j * n * z2.sigma)
    return complex(u @ (spec.coeffs @ v))
