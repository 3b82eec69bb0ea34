"""Sample-grid and spectral containers for functions on the unit circle.

Every module shares one angular grid, ``t_k = -pi + 2*pi*k/N``: it is
symmetric about zero and contains ``-pi``, matching integrals taken over
``(-pi, pi]``.  Grid functions fix pointwise representatives; nothing in
this package asserts almost-everywhere statements.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

__all__ = ["grid_angles", "UnitGridFunction", "SpectralFunction", "BidiskSpectrum"]


def grid_angles(n: int) -> np.ndarray:
    """Angles t_k = -pi + 2*pi*k/n for k = 0..n-1."""
    if int(n) != n or n < 2:
        raise ValueError(f"grid size must be an integer >= 2, got {n!r}")
    n = int(n)
    return -np.pi + (2.0 * np.pi / n) * np.arange(n)


@dataclass(eq=False)
class UnitGridFunction:
    """N uniform complex samples of a function on the unit circle.

    ``samples[k]`` is the value at ``grid_angles(N)[k]``.  ``meta`` holds
    diagnostic flags attached by producers (for instance the aliasing
    warning set by an under-resolved quadrature convolution) and never
    influences numerical results.
    """

    samples: np.ndarray
    meta: dict = field(default_factory=dict, repr=False)

    def __post_init__(self) -> None:
        s = np.atleast_1d(np.asarray(self.samples, dtype=np.complex128))
        if s.ndim != 1 or s.size < 2:
            raise ValueError("need a 1-d array of at least 2 samples")
        if not np.all(np.isfinite(s)):
            raise ValueError("samples must be finite")
        self.samples = s

    @property
    def n(self) -> int:
        return int(self.samples.size)

    @property
    def angles(self) -> np.ndarray:
        return grid_angles(self.n)

    def _coerce(self, other):
        if isinstance(other, UnitGridFunction):
            if other.n != self.n:
                raise ValueError(f"grid sizes differ: {self.n} vs {other.n}")
            return other.samples
        return np.complex128(other)

    def __add__(self, other):
        return UnitGridFunction(self.samples + self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        return UnitGridFunction(self.samples - self._coerce(other))

    def __mul__(self, scalar):
        return UnitGridFunction(self.samples * np.complex128(scalar))

    __rmul__ = __mul__


@dataclass(eq=False)
class SpectralFunction:
    """Two-sided Fourier coefficients c_n for |n| <= M, stored n = -M..M."""

    coeffs: np.ndarray

    def __post_init__(self) -> None:
        c = np.atleast_1d(np.asarray(self.coeffs, dtype=np.complex128))
        if c.ndim != 1 or c.size % 2 != 1:
            raise ValueError("need an odd-length 1-d coefficient array (n = -M..M)")
        if not np.all(np.isfinite(c)):
            raise ValueError("coefficients must be finite")
        self.coeffs = c

    @property
    def m(self) -> int:
        return (int(self.coeffs.size) - 1) // 2

    @property
    def frequencies(self) -> np.ndarray:
        return np.arange(-self.m, self.m + 1)

    def coeff(self, n: int) -> complex:
        """Coefficient c_n; zero outside the stored band."""
        if abs(int(n)) > self.m:
            return 0j
        return complex(self.coeffs[int(n) + self.m])

    @property
    def is_analytic_type(self) -> bool:
        """True when every negative-frequency coefficient vanishes."""
        return bool(np.all(self.coeffs[: self.m] == 0))

    @classmethod
    def from_dict(cls, coeffs: dict) -> "SpectralFunction":
        """Build from a sparse ``{frequency: coefficient}`` mapping."""
        if not coeffs:
            return cls(np.zeros(1, dtype=np.complex128))
        m = max(abs(int(k)) for k in coeffs)
        c = np.zeros(2 * m + 1, dtype=np.complex128)
        for k, v in coeffs.items():
            c[int(k) + m] = complex(v)
        return cls(c)


@dataclass(eq=False)
class BidiskSpectrum:
    """Tensor Fourier coefficients c_{m,n} on the bidisk torus.

    ``coeffs[m + M1, n + M2]`` stores c_{m,n} for |m| <= M1, |n| <= M2.
    """

    coeffs: np.ndarray

    def __post_init__(self) -> None:
        c = np.asarray(self.coeffs, dtype=np.complex128)
        if c.ndim != 2 or c.shape[0] % 2 != 1 or c.shape[1] % 2 != 1:
            raise ValueError("need a 2-d coefficient array with odd sides")
        if not np.all(np.isfinite(c)):
            raise ValueError("coefficients must be finite")
        self.coeffs = c

    @property
    def m1(self) -> int:
        return (int(self.coeffs.shape[0]) - 1) // 2

    @property
    def m2(self) -> int:
        return (int(self.coeffs.shape[1]) - 1) // 2

    def coeff(self, m: int, n: int) -> complex:
        if abs(int(m)) > self.m1 or abs(int(n)) > self.m2:
            return 0j
        return complex(self.coeffs[int(m) + self.m1, int(n) + self.m2])

    @classmethod
    def from_dict(cls, coeffs: dict) -> "BidiskSpectrum":
        """Build from a sparse ``{(m, n): coefficient}`` mapping."""
        if not coeffs:
            return cls(np.zeros((1, 1), dtype=np.complex128))
        m1 = max(abs(int(k[0])) for k in coeffs)
        m2 = max(abs(int(k[1])) for k in coeffs)
        c = np.zeros((2 * m1 + 1, 2 * m2 + 1), dtype=np.complex128)
        for (m, n), v in coeffs.items():
            c[int(m) + m1, int(n) + m2] = complex(v)
        return cls(c)
