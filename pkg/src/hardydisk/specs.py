"""Declarative catalogue of test functions on the circle and the disk.

Boundary data comes in four flavors: trigonometric polynomials, piecewise
constant steps, and restrictions to the circle of Taylor polynomials or
Blaschke products.  The holomorphic flavors (plus scalar multiples and
products of them) evaluate exactly at any point of the closed disk, which
is what the interior-reproduction and trace routines rely on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from .grids import BidiskSpectrum

__all__ = [
    "SpecError",
    "TrigSpec",
    "StepSpec",
    "TaylorSpec",
    "BlaschkeSpec",
    "ScaledSpec",
    "ProductSpec",
    "HoloSpec",
    "BoundarySpec",
    "is_holo_spec",
    "evaluate",
    "boundary_values",
    "spec_product",
    "parse_spec",
]


class SpecError(ValueError):
    """Malformed function description."""


def _complex_tuple(values, what: str) -> tuple[complex, ...]:
    try:
        out = tuple(complex(v) for v in values)
    except (TypeError, ValueError) as exc:
        raise SpecError(f"{what} must be a sequence of complex numbers") from exc
    if not all(math.isfinite(v.real) and math.isfinite(v.imag) for v in out):
        raise SpecError(f"{what} must be finite")
    return out


@dataclass
class TrigSpec:
    """Finite two-sided trigonometric polynomial sum_n c_n exp(i n t)."""

    coeffs: dict

    def __post_init__(self) -> None:
        try:
            items = {int(k): complex(v) for k, v in dict(self.coeffs).items()}
        except (TypeError, ValueError) as exc:
            raise SpecError("trig coeffs must map integers to complex numbers") from exc
        for v in items.values():
            if not (math.isfinite(v.real) and math.isfinite(v.imag)):
                raise SpecError("trig coeffs must be finite")
        self.coeffs = items


@dataclass
class StepSpec:
    """Piecewise constant function on the circle.

    ``values[j]`` is taken on the arc starting at ``breaks[j]`` and ending
    at the next break (cyclically), so the sample at a jump is the right
    limit.  Breaks are strictly increasing within (-pi, pi].
    """

    breaks: tuple
    values: tuple

    def __post_init__(self) -> None:
        try:
            breaks = tuple(float(b) for b in self.breaks)
        except (TypeError, ValueError) as exc:
            raise SpecError("step breaks must be real angles") from exc
        values = _complex_tuple(self.values, "step values")
        if len(breaks) != len(values) or not breaks:
            raise SpecError("step needs equally many breaks and values, at least one each")
        if any(not -math.pi < b <= math.pi for b in breaks):
            raise SpecError("step breaks must lie in (-pi, pi]")
        if any(b2 <= b1 for b1, b2 in zip(breaks, breaks[1:])):
            raise SpecError("step breaks must be strictly increasing")
        self.breaks = breaks
        self.values = values


@dataclass
class TaylorSpec:
    """Polynomial a_0 + a_1 z + ... + a_d z^d, entire, hence fine on |z| <= 1."""

    coeffs: tuple

    def __post_init__(self) -> None:
        coeffs = _complex_tuple(self.coeffs, "taylor coeffs")
        if not coeffs:
            raise SpecError("taylor needs at least the constant coefficient")
        self.coeffs = coeffs

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1


@dataclass
class BlaschkeSpec:
    """Product of Blaschke factors (a - z) / (1 - conj(a) z).

    Zeros strictly inside the disk keep the poles outside the closed disk,
    so the product is analytic on |z| <= 1 with unimodular boundary values.
    """

    zeros: tuple

    def __post_init__(self) -> None:
        zeros = _complex_tuple(self.zeros, "blaschke zeros")
        if not zeros:
            raise SpecError("blaschke needs at least one zero")
        if any(abs(a) >= 1.0 for a in zeros):
            raise SpecError("blaschke zeros must lie strictly inside the unit disk")
        self.zeros = zeros


@dataclass
class ScaledSpec:
    """Constant multiple of a holomorphic spec."""

    factor: complex
    inner: "HoloSpec"

    def __post_init__(self) -> None:
        self.factor = complex(self.factor)
        if not (math.isfinite(self.factor.real) and math.isfinite(self.factor.imag)):
            raise SpecError("scaled factor must be finite")
        if not is_holo_spec(self.inner):
            raise SpecError("scaled inner spec must be holomorphic (taylor/blaschke/product/scaled)")


@dataclass
class ProductSpec:
    """Pointwise product of holomorphic specs."""

    factors: tuple

    def __post_init__(self) -> None:
        factors = tuple(self.factors)
        if not factors:
            raise SpecError("product needs at least one factor")
        if not all(is_holo_spec(f) for f in factors):
            raise SpecError("product factors must be holomorphic specs")
        self.factors = factors


HoloSpec = Union[TaylorSpec, BlaschkeSpec, ScaledSpec, ProductSpec]
BoundarySpec = Union[HoloSpec, TrigSpec, StepSpec]

_HOLO_TYPES = (TaylorSpec, BlaschkeSpec, ScaledSpec, ProductSpec)


def is_holo_spec(spec) -> bool:
    return isinstance(spec, _HOLO_TYPES)


def evaluate(spec, z):
    """Pointwise value of a holomorphic spec at points z with |z| <= 1.

    ``z`` may be a scalar or an array; the result matches its shape.
    """
    zz = np.asarray(z, dtype=np.complex128)
    scalar = zz.ndim == 0
    out = _evaluate(spec, zz)
    return complex(out) if scalar else out


def _evaluate(spec, z: np.ndarray) -> np.ndarray:
    if isinstance(spec, TaylorSpec):
        acc = np.zeros_like(z)
        for a in reversed(spec.coeffs):
            acc = acc * z + a
        return acc
    if isinstance(spec, BlaschkeSpec):
        acc = np.ones_like(z)
        for a in spec.zeros:
            acc = acc * (a - z) / (1.0 - np.conj(a) * z)
        return acc
    if isinstance(spec, ScaledSpec):
        return spec.factor * _evaluate(spec.inner, z)
    if isinstance(spec, ProductSpec):
        acc = np.ones_like(z)
        for f in spec.factors:
            acc = acc * _evaluate(f, z)
        return acc
    raise TypeError(f"not a holomorphic spec: {type(spec).__name__}")


def boundary_values(spec, t) -> np.ndarray:
    """Values of the boundary function described by ``spec`` at angles t."""
    tt = np.atleast_1d(np.asarray(t, dtype=float))
    if isinstance(spec, TrigSpec):
        out = np.zeros(tt.shape, dtype=np.complex128)
        for n in sorted(spec.coeffs):
            out += spec.coeffs[n] * np.exp(1j * n * tt)
        return out
    if isinstance(spec, StepSpec):
        idx = np.searchsorted(np.asarray(spec.breaks), tt, side="right") - 1
        values = np.asarray(spec.values + (spec.values[-1],), dtype=np.complex128)
        return values[idx]
    if is_holo_spec(spec):
        return _evaluate(spec, np.exp(1j * tt))
    raise TypeError(f"not a boundary spec: {type(spec).__name__}")


def spec_product(f, g):
    """Structural product of two holomorphic specs.

    Taylor pairs multiply by coefficient convolution and Blaschke pairs by
    concatenating zero lists, so the product evaluates along a different
    route than the pointwise product of the factors.  Other combinations
    fall back to a ProductSpec wrapper, where the product identity holds
    by construction.
    """
    if not (is_holo_spec(f) and is_holo_spec(g)):
        raise SpecError("spec_product needs holomorphic specs")
    if isinstance(f, ScaledSpec) or isinstance(g, ScaledSpec):
        factor = 1.0 + 0j
        if isinstance(f, ScaledSpec):
            factor *= f.factor
            f = f.inner
        if isinstance(g, ScaledSpec):
            factor *= g.factor
            g = g.inner
        return ScaledSpec(factor, spec_product(f, g))
    if isinstance(f, TaylorSpec) and isinstance(g, TaylorSpec):
        conv = np.convolve(np.asarray(f.coeffs), np.asarray(g.coeffs))
        return TaylorSpec(tuple(conv))
    if isinstance(f, BlaschkeSpec) and isinstance(g, BlaschkeSpec):
        return BlaschkeSpec(f.zeros + g.zeros)
    left = f.factors if isinstance(f, ProductSpec) else (f,)
    right = g.factors if isinstance(g, ProductSpec) else (g,)
    return ProductSpec(left + right)


def _parse_complex(value, field: str) -> complex:
    if (
        not isinstance(value, (list, tuple))
        or len(value) != 2
        or not all(isinstance(x, (int, float)) for x in value)
    ):
        raise SpecError(f"field {field!r} must be a [re, im] pair")
    return complex(value[0], value[1])


def _require(data: dict, field: str):
    if field not in data:
        raise SpecError(f"spec is missing required field {field!r}")
    return data[field]


def parse_spec(data):
    """Build a function spec from its JSON dictionary form.

    Accepted shapes:

    - ``{"type": "trig", "coeffs": {"<n>": [re, im], ...}}``
    - ``{"type": "taylor", "coeffs": [[re, im], ...]}``
    - ``{"type": "blaschke", "zeros": [[re, im], ...]}``
    - ``{"type": "step", "breaks": [angle, ...], "values": [[re, im], ...]}``
    - ``{"type": "scaled", "factor": [re, im], "inner": <spec>}``
    - ``{"type": "product", "factors": [<spec>, ...]}``
    - ``{"type": "trig2d", "coeffs": {"<m>,<n>": [re, im], ...}}``
    """
    if not isinstance(data, dict):
        raise SpecError("spec must be a JSON object")
    kind = _require(data, "type")
    if kind == "trig":
        raw = _require(data, "coeffs")
        if not isinstance(raw, dict):
            raise SpecError("field 'coeffs' of a trig spec must be an object")
        coeffs = {}
        for key, val in raw.items():
            try:
                n = int(key)
            except ValueError as exc:
                raise SpecError(f"trig frequency {key!r} in field 'coeffs' is not an integer") from exc
            coeffs[n] = _parse_complex(val, "coeffs")
        return TrigSpec(coeffs)
    if kind == "taylor":
        raw = _require(data, "coeffs")
        if not isinstance(raw, list) or not raw:
            raise SpecError("field 'coeffs' of a taylor spec must be a non-empty list")
        return TaylorSpec(tuple(_parse_complex(v, "coeffs") for v in raw))
    if kind == "blaschke":
        raw = _require(data, "zeros")
        if not isinstance(raw, list) or not raw:
            raise SpecError("field 'zeros' of a blaschke spec must be a non-empty list")
        return BlaschkeSpec(tuple(_parse_complex(v, "zeros") for v in raw))
    if kind == "step":
        breaks = _require(data, "breaks")
        values = _require(data, "values")
        if not isinstance(breaks, list) or not isinstance(values, list):
            raise SpecError("fields 'breaks' and 'values' of a step spec must be lists")
        return StepSpec(tuple(breaks), tuple(_parse_complex(v, "values") for v in values))
    if kind == "scaled":
        factor = _parse_complex(_require(data, "factor"), "factor")
        inner = parse_spec(_require(data, "inner"))
        if not is_holo_spec(inner):
            raise SpecError("field 'inner' of a scaled spec must be holomorphic")
        return ScaledSpec(factor, inner)
    if kind == "product":
        raw = _require(data, "factors")
        if not isinstance(raw, list) or not raw:
            raise SpecError("field 'factors' of a product spec must be a non-empty list")
        factors = tuple(parse_spec(v) for v in raw)
        if not all(is_holo_spec(f) for f in factors):
            raise SpecError("field 'factors' of a product spec must hold holomorphic specs")
        return ProductSpec(factors)
    if kind == "trig2d":
        raw = _require(data, "coeffs")
        if not isinstance(raw, dict):
            raise SpecError("field 'coeffs' of a trig2d spec must be an object")
        coeffs = {}
        for key, val in raw.items():
            parts = str(key).split(",")
            try:
                m, n = (int(p) for p in parts)
            except ValueError as exc:
                raise SpecError(f"trig2d key {key!r} in field 'coeffs' must look like 'm,n'") from exc
            coeffs[(m, n)] = _parse_complex(val, "coeffs")
        return BidiskSpectrum.from_dict(coeffs)
    raise SpecError(f"unknown spec type {kind!r}")
