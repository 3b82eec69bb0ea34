"""End-to-end verification suite: one callable per acceptance criterion.

Each criterion pins its tolerances and (where randomness is involved) its
seed, so repeated runs are byte-for-byte reproducible.  The CLI selftest
and the test suite both run these.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .circle import convolve_poisson, norm, sample, synthesize
from .density import fit_span, residual_curve
from .extend import bidisk_extend, check_harmonic, poisson_extend, reproduce_interior
from .grids import BidiskSpectrum, SpectralFunction, UnitGridFunction, grid_angles
from .kernel import DiskPoint, eval_kernel, verify_kernel_properties
from .specs import BlaschkeSpec, ProductSpec, ScaledSpec, StepSpec, TaylorSpec, TrigSpec, evaluate
from .trace import (
    DiskGrid,
    approx_identity_curve,
    isometry_report,
    product_trace_residual,
    radial_trace,
    trace_spectrum,
    weakstar_residual,
)

__all__ = ["CriterionResult", "CRITERIA", "run_all", "homomorphism_catalogue", "bidisk_quadrature"]

_SEED = 20240817


@dataclass
class CriterionResult:
    index: int
    name: str
    passed: bool
    detail: str


def _random_taylor_specs(rng, count: int, max_degree: int) -> list:
    specs = []
    for _ in range(count):
        degree = int(rng.integers(0, max_degree + 1))
        coeffs = rng.standard_normal(degree + 1) + 1j * rng.standard_normal(degree + 1)
        specs.append(TaylorSpec(tuple(coeffs)))
    return specs


def _random_points(rng, count: int, max_r: float) -> list:
    radii = max_r * rng.random(count)
    angles = -np.pi + 2.0 * np.pi * rng.random(count)
    return [DiskPoint(r, s) for r, s in zip(radii, angles)]


def _step_pm_one() -> StepSpec:
    return StepSpec(breaks=(-np.pi / 2, np.pi / 2), values=(1.0, -1.0))


def _step_indicator() -> StepSpec:
    return StepSpec(breaks=(-np.pi / 2, np.pi / 2), values=(1.0, 0.0))


def criterion_kernel_mean() -> CriterionResult:
    """Unit mean of the kernel under the trapezoid rule."""
    worst = 0.0
    for r in (0.0, 0.5, 0.9, 0.99):
        report = verify_kernel_properties(r, 0.5, 4096)[3]
        worst = max(worst, report.max_violation)
    return CriterionResult(1, "kernel unit mean", worst <= 1e-12, f"max |mean - 1| = {worst:.3e} (tol 1e-12)")


def criterion_kernel_shape() -> CriterionResult:
    """Monotonicity, positivity, evenness and tail decay of the kernel."""
    ok = True
    worst = 0.0
    for r in (0.5, 0.9, 0.99):
        reports = verify_kernel_properties(r, 0.5, 2**14)
        ok = ok and all(rep.passed for rep in reports)
        worst = max(worst, max(rep.max_violation for rep in reports))
    tails = [
        verify_kernel_properties(r, 0.5, 2**14)[4].metadata["sup_value"]
        for r in (0.9, 0.99, 0.999, 0.9999)
    ]
    decreasing = all(b < a for a, b in zip(tails, tails[1:]))
    small = tails[-1] < 1e-2
    ok = ok and decreasing and small
    return CriterionResult(
        2,
        "kernel shape properties",
        ok,
        f"max violation {worst:.3e}; tail sups {', '.join(f'{v:.3e}' for v in tails)}",
    )


def criterion_interior_reproduction() -> CriterionResult:
    """Interior reproduction of polynomials from dilated boundary data."""
    rng = np.random.default_rng(_SEED)
    specs = _random_taylor_specs(rng, 20, 32)
    points = _random_points(rng, 50, 0.9)
    worst = 0.0
    for f in specs:
        for rho in (1.0, 0.95):
            for z in points:
                worst = max(worst, reproduce_interior(f, z, rho, 4096))
    return CriterionResult(
        3, "interior reproduction", worst <= 1e-9, f"max residual {worst:.3e} (tol 1e-9)"
    )


def criterion_path_agreement() -> CriterionResult:
    """Quadrature and spectral convolution agree on band-limited data."""
    rng = np.random.default_rng(_SEED + 1)
    worst = 0.0
    for _ in range(4):
        coeffs = rng.standard_normal(129) + 1j * rng.standard_normal(129)
        f = synthesize(SpectralFunction(coeffs), 2048)
        for r in (0.5, 0.9):
            q = convolve_poisson(f, r, "quadrature")
            s = convolve_poisson(f, r, "spectral")
            worst = max(worst, norm(q - s, "l1"))
    return CriterionResult(
        4, "convolution path agreement", worst <= 1e-9, f"max L1 gap {worst:.3e} (tol 1e-9)"
    )


def criterion_trace_reconstruction() -> CriterionResult:
    """Polynomial reconstruction from the trace, and Blaschke isometry."""
    rng = np.random.default_rng(_SEED)
    specs = _random_taylor_specs(rng, 20, 32)
    points = _random_points(rng, 50, 0.9)
    worst = 0.0
    for f in specs:
        spectrum = trace_spectrum(f)
        for z in points:
            worst = max(worst, abs(poisson_extend(spectrum, z) - evaluate(f, z.to_complex())))
    blaschke = BlaschkeSpec((0.4,))
    result = radial_trace(blaschke, (0.9, 0.99, 0.999, 0.9999), 4096)
    sup_disk, sup_circle = isometry_report(blaschke, result.trace, DiskGrid(14, 512))
    in_band = all(0.999 <= v <= 1.0 + 1e-9 for v in (sup_disk, sup_circle))
    ok = worst <= 1e-10 and in_band
    return CriterionResult(
        5,
        "trace reconstruction and isometry",
        ok,
        f"max reconstruction residual {worst:.3e} (tol 1e-10); sup estimates ({sup_disk:.6f}, {sup_circle:.6f})",
    )


def homomorphism_catalogue() -> list:
    """Twenty labelled spec pairs exercising trace multiplicativity."""
    t = TaylorSpec
    b = BlaschkeSpec
    pairs = [
        ("z * z^2", t((0, 1)), t((0, 0, 1))),
        ("(1+z)(1-z)", t((1, 1)), t((1, -1))),
        ("(z^5+3z^2)(2+z^3)", t((0, 0, 3, 0, 0, 1)), t((2, 0, 0, 1))),
        ("(1+2z+3z^2)(4+5z)", t((1, 2, 3)), t((4, 5))),
        ("complex quadratics", t((1j, 2, 0.5 - 0.5j)), t((2 - 1j, 0, 1j))),
        ("degree 8 x degree 5", t(tuple(0.3 * k + 0.1j for k in range(9))), t((1, 0, 0, 0, 0, -1))),
        ("constant x cubic", t((3.5,)), t((0, 1, 0, 2))),
        ("affine pair", t((0.5, -0.25j)), t((-1, 1 + 1j))),
        ("blaschke 0.4 squared", b((0.4,)), b((0.4,))),
        ("blaschke 0.4 x -0.3", b((0.4,)), b((-0.3,))),
        ("blaschke imaginary zeros", b((0.5j,)), b((0.2 - 0.3j,))),
        ("two-zero x one-zero", b((0.4, -0.2)), b((0.1j,))),
        ("three-zero x two-zero", b((0.1, 0.2, -0.3j)), b((0.6, -0.5))),
        ("blaschke near boundary", b((0.85,)), b((0.7j,))),
        ("conjugate zeros", b((0.3 + 0.4j,)), b((0.3 - 0.4j,))),
        ("repeated zero", b((0.25, 0.25)), b((0.25,))),
        ("poly x blaschke", t((1, 1)), b((0.3,))),
        ("blaschke x poly", b((0.25,)), t((0, 0, 1))),
        ("scaled poly x poly", ScaledSpec(2.0 - 1j, t((0, 1))), t((1, 1))),
        ("product spec x blaschke", ProductSpec((t((0, 1)), b((0.4,)))), b((0.4,))),
    ]
    return pairs


def criterion_homomorphism() -> CriterionResult:
    """Trace of a product equals the product of traces."""
    worst = 0.0
    for _, f, g in homomorphism_catalogue():
        worst = max(worst, product_trace_residual(f, g, 1024))
    return CriterionResult(
        6, "trace multiplicativity", worst <= 1e-12, f"max residual {worst:.3e} over 20 pairs (tol 1e-12)"
    )


def criterion_uniqueness() -> CriterionResult:
    """Perturbed traces are visible to kernel test functionals."""
    f = TaylorSpec((0, 0, 0, 1))
    candidate = synthesize(trace_spectrum(f), 2048)
    points = [DiskPoint(r, s) for r in (0.25, 0.5) for s in grid_angles(8)]
    clean = weakstar_residual(f, candidate, points)
    t = candidate.angles
    perturbed = UnitGridFunction(candidate.samples + 0.1 * np.exp(5j * t))
    bumped = weakstar_residual(f, perturbed, points)
    floor = 0.1 * 0.5**5 - 1e-6
    ok = clean <= 1e-10 and bumped >= floor
    return CriterionResult(
        7,
        "trace uniqueness residuals",
        ok,
        f"clean {clean:.3e} (tol 1e-10); perturbed {bumped:.3e} (floor {floor:.3e})",
    )


def criterion_approximate_identity() -> CriterionResult:
    """Exact smoothing law for a pure frequency; decay for a step."""
    g = sample(TrigSpec({1: 1.0}), 4096)
    curve = approx_identity_curve(g, (0.5, 0.9, 0.99))
    law = max(abs(v - (1.0 - r)) for v, r in zip(curve, (0.5, 0.9, 0.99)))
    step = sample(_step_pm_one(), 2**16)
    step_curve = approx_identity_curve(step, (0.9, 0.99, 0.999))
    decreasing = all(b < a for a, b in zip(step_curve, step_curve[1:]))
    ok = law <= 1e-12 and decreasing and step_curve[-1] < 0.02
    return CriterionResult(
        8,
        "approximate identity",
        ok,
        f"law defect {law:.3e} (tol 1e-12); step curve {', '.join(f'{v:.4f}' for v in step_curve)}",
    )


def criterion_harmonicity() -> CriterionResult:
    """Mean value property of extensions of band-limited boundaries."""
    rng = np.random.default_rng(_SEED + 2)
    worst = 0.0
    for _ in range(10):
        coeffs = rng.standard_normal(17) + 1j * rng.standard_normal(17)
        boundary = SpectralFunction(coeffs)
        for _ in range(5):
            a = DiskPoint(0.5 * rng.random(), -np.pi + 2 * np.pi * rng.random())
            radius = 0.05 + rng.random() * (0.9 - a.r - 0.05)
            worst = max(worst, check_harmonic(boundary, a, radius, 64))
    return CriterionResult(
        9, "mean value harmonicity", worst <= 1e-9, f"max residual {worst:.3e} (tol 1e-9)"
    )


def criterion_round_trip() -> CriterionResult:
    """Extend-then-dilate recovers two-sided boundary spectra."""
    rng = np.random.default_rng(_SEED + 3)
    n = 2048
    r_max = 0.9999
    radii = (0.9, 0.99, r_max)
    ok = True
    details = []
    for freq in (5, -9, 16, -16):
        c = SpectralFunction.from_dict({freq: 1.0})
        result = radial_trace(c, radii, n)
        err = norm(result.trace - synthesize(c, n), "l1")
        bound = (1.0 - r_max ** abs(freq)) + 1e-12
        ok = ok and err <= bound and err <= 2e-3
        details.append(err)
    for _ in range(3):
        coeffs = rng.standard_normal(33) + 1j * rng.standard_normal(33)
        c = SpectralFunction(coeffs)
        result = radial_trace(c, radii, n)
        err = norm(result.trace - synthesize(c, n), "l1")
        bound = float(np.sum(np.abs(coeffs) * (1.0 - r_max ** np.abs(c.frequencies)))) + 1e-12
        ok = ok and err <= bound
        details.append(err)
    return CriterionResult(
        10,
        "extend/trace round trip",
        ok,
        f"L1 recovery errors {', '.join(f'{v:.2e}' for v in details)}",
    )


def criterion_density_fit() -> CriterionResult:
    """Kernel-span fits: decreasing step residuals and in-span exactness.

    The step target is the unit-jump indicator of a half circle.  With the
    node radius pinned at 0.95, a linear-programming certificate puts the
    best possible L1 residual for a jump of size 2 at 0.078, so the 0.05
    budget fixes the jump size at 1.
    """
    step = sample(_step_indicator(), 8192)
    curve = residual_curve(step, (8, 16, 32, 64), 0.95)
    decreasing = all(b < a for a, b in zip(curve, curve[1:]))
    ok = decreasing and curve[-1] < 0.05

    nodes = [DiskPoint(0.7, -np.pi + 2 * np.pi * j / 6) for j in range(6)]
    weights = np.array([1.0, -0.5, 0.25 + 0.5j, 2.0, -1.5j, 0.75])
    angles = grid_angles(2048)
    samples = sum(w * eval_kernel(z.r, z.sigma - angles) for w, z in zip(weights, nodes))
    target = UnitGridFunction(samples)
    fit = fit_span(target, nodes)
    coeff_err = float(np.max(np.abs(fit.coefficients - weights)))
    ok = ok and fit.residual_l1 <= 1e-9 and coeff_err <= 1e-6
    return CriterionResult(
        11,
        "density fitting",
        ok,
        f"step residuals {', '.join(f'{v:.4f}' for v in curve)}; "
        f"in-span residual {fit.residual_l1:.2e}, coeff error {coeff_err:.2e}",
    )


def bidisk_quadrature(spec: BidiskSpectrum, z1: DiskPoint, z2: DiskPoint, n: int) -> complex:
    """Iterated trapezoid evaluation of the tensor extension; test oracle."""
    s = grid_angles(n)
    t = grid_angles(n)
    m = np.arange(-spec.m1, spec.m1 + 1)
    k = np.arange(-spec.m2, spec.m2 + 1)
    f = np.exp(1j * np.outer(s, m)) @ spec.coeffs @ np.exp(1j * np.outer(k, t))
    w1 = eval_kernel(z1.r, z1.sigma - s) / n
    w2 = eval_kernel(z2.r, z2.sigma - t) / n
    return complex(w1 @ f @ w2)


def criterion_bidisk() -> CriterionResult:
    """Tensor extension matches the product multiplier and 2-d quadrature."""
    rng = np.random.default_rng(_SEED + 4)
    spec = BidiskSpectrum.from_dict({(2, 3): 1.0})
    worst = 0.0
    for _ in range(20):
        z1 = DiskPoint(0.95 * rng.random(), -np.pi + 2 * np.pi * rng.random())
        z2 = DiskPoint(0.95 * rng.random(), -np.pi + 2 * np.pi * rng.random())
        expected = z1.r**2 * z2.r**3 * np.exp(1j * (2 * z1.sigma + 3 * z2.sigma))
        worst = max(worst, abs(bidisk_extend(spec, z1, z2) - expected))
    z1 = DiskPoint(0.7, 0.9)
    z2 = DiskPoint(0.55, -1.3)
    quad_gap = abs(bidisk_extend(spec, z1, z2) - bidisk_quadrature(spec, z1, z2, 256))
    ok = worst <= 1e-10 and quad_gap <= 1e-8
    return CriterionResult(
        12,
        "bidisk extension",
        ok,
        f"max multiplier defect {worst:.3e} (tol 1e-10); quadrature gap {quad_gap:.3e} (tol 1e-8)",
    )


CRITERIA = (
    criterion_kernel_mean,
    criterion_kernel_shape,
    criterion_interior_reproduction,
    criterion_path_agreement,
    criterion_trace_reconstruction,
    criterion_homomorphism,
    criterion_uniqueness,
    criterion_approximate_identity,
    criterion_harmonicity,
    criterion_round_trip,
    criterion_density_fit,
    criterion_bidisk,
)


def run_all() -> list:
    """Run every criterion in order and return the results."""
    return [criterion() for criterion in CRITERIA]
