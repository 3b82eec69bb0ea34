"""Poisson extensions and boundary traces on the unit disk.

A numerical companion to the classical embedding of bounded holomorphic
(and harmonic) functions on the disk into bounded functions on the
circle: kernels, interior extensions, radial boundary traces, and L1
approximation by kernel spans, each computed by two independent routes
so every identity can be checked rather than assumed.
"""

from .circle import analyze, convolve_poisson, norm, sample, synthesize
from .density import FitOptions, FitResult, fit_span, residual_curve
from .extend import bidisk_extend, check_harmonic, poisson_extend, reproduce_interior
from .grids import BidiskSpectrum, SpectralFunction, UnitGridFunction, grid_angles
from .kernel import (
    DiskPoint,
    PropertyReport,
    eval_kernel,
    eval_kernel_at,
    eval_kernel_modulus_form,
    herglotz_eval,
    kernel_spectrum,
    verify_kernel_properties,
)
from .specs import (
    BlaschkeSpec,
    BoundarySpec,
    HoloSpec,
    ProductSpec,
    ScaledSpec,
    SpecError,
    StepSpec,
    TaylorSpec,
    TrigSpec,
    boundary_values,
    evaluate,
    is_holo_spec,
    parse_spec,
    spec_product,
)
from .trace import (
    DiskGrid,
    TraceResult,
    approx_identity_curve,
    default_radii,
    default_testpoints,
    isometry_report,
    product_trace_residual,
    radial_trace,
    trace_spectrum,
    weakstar_residual,
)

__version__ = "0.1.0"

__all__ = [
    "analyze",
    "approx_identity_curve",
    "bidisk_extend",
    "BidiskSpectrum",
    "BlaschkeSpec",
    "BoundarySpec",
    "boundary_values",
    "check_harmonic",
    "convolve_poisson",
    "default_radii",
    "default_testpoints",
    "DiskGrid",
    "DiskPoint",
    "eval_kernel",
    "eval_kernel_at",
    "eval_kernel_modulus_form",
    "evaluate",
    "fit_span",
    "FitOptions",
    "FitResult",
    "grid_angles",
    "herglotz_eval",
    "HoloSpec",
    "is_holo_spec",
    "isometry_report",
    "kernel_spectrum",
    "norm",
    "parse_spec",
    "poisson_extend",
    "ProductSpec",
    "product_trace_residual",
    "PropertyReport",
    "radial_trace",
    "reproduce_interior",
    "residual_curve",
    "sample",
    "ScaledSpec",
    "SpecError",
    "spec_product",
    "SpectralFunction",
    "StepSpec",
    "synthesize",
    "TaylorSpec",
    "TraceResult",
    "trace_spectrum",
    "TrigSpec",
    "UnitGridFunction",
    "verify_kernel_properties",
    "weakstar_residual",
]
