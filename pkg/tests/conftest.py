"""Shared brute-force oracles, independent of the fast code paths."""

import numpy as np

from hardydisk import eval_kernel


def slow_coefficients(samples: np.ndarray, m: int) -> np.ndarray:
    """Fourier coefficients by the literal mean, one frequency at a time."""
    n = len(samples)
    t = -np.pi + 2.0 * np.pi * np.arange(n) / n
    return np.array([(samples * np.exp(-1j * k * t)).mean() for k in range(-m, m + 1)])


def direct_convolution(samples: np.ndarray, r: float) -> np.ndarray:
    """Circular Poisson convolution as an explicit double loop over samples."""
    n = len(samples)
    t = -np.pi + 2.0 * np.pi * np.arange(n) / n
    out = np.empty(n, dtype=complex)
    for j in range(n):
        out[j] = (samples * eval_kernel(r, t[j] - t)).mean()
    return out
