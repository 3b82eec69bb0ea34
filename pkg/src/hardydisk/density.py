"""L1 approximation of circle functions by finite spans of Poisson kernels.

This is the constructive face of the density of such spans in L1: given
interior nodes z_1..z_J, find weights minimizing the grid L1 norm of
``target - sum_j w_j P_{z_j}``.  The solver is iteratively reweighted
least squares with a small ridge on the normal equations; it is
deterministic for fixed options and reports failure through the result
flag rather than by raising.  Node placement is entirely the caller's
choice; nothing here optimizes it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .grids import UnitGridFunction
from .kernel import DiskPoint, eval_kernel, normalize_angle

__all__ = ["FitOptions", "FitResult", "fit_span", "residual_curve"]


@dataclass(frozen=True)
class FitOptions:
    """IRLS solver controls.

    ``real_coefficients`` restricts the weights to reals; by default the
    fit is complex, matching complex-valued targets.
    """

    max_iter: int = 200
    tol: float = 1e-10
    eps: float = 1e-8
    ridge: float = 1e-10
    real_coefficients: bool = False


@dataclass
class FitResult:
    nodes: tuple
    coefficients: np.ndarray
    residual_l1: float
    iterations: int
    converged: bool
    message: str = ""


def _design_matrix(nodes, angles: np.ndarray) -> np.ndarray:
    columns = [eval_kernel(z.r, z.sigma - angles) for z in nodes]
    return np.column_stack(columns)


def _check_nodes(nodes, n: int) -> tuple:
    zs = tuple(nodes)
    if not zs:
        raise ValueError("need at least one node")
    if not all(isinstance(z, DiskPoint) for z in zs):
        raise TypeError("nodes must be DiskPoints")
    min_gap = 2.0 * math.pi / n
    for i in range(len(zs)):
        for j in range(i + 1, len(zs)):
            if zs[i] == zs[j]:
                raise ValueError(f"nodes {i} and {j} coincide")
            gap = abs(normalize_angle(zs[i].sigma - zs[j].sigma))
            if gap < min_gap:
                raise ValueError(
                    f"nodes {i} and {j} are angularly closer than the grid spacing "
                    f"({gap:.3e} < {min_gap:.3e}); kernel columns would be numerically dependent"
                )
    return zs


def fit_span(target: UnitGridFunction, nodes, opts: FitOptions | None = None) -> FitResult:
    """L1-minimal weights for the kernel span at the given nodes.

    Runs IRLS: solve a weighted ridge least-squares problem, reweight by
    the reciprocal residual magnitudes (floored at ``opts.eps``), repeat
    until the grid L1 residual moves by less than ``opts.tol`` or the
    iteration cap is hit.  An ill-conditioned system that defeats the
    ridge is reported as ``converged=False`` with a message, not raised.
    """
    opts = opts or FitOptions()
    zs = _check_nodes(nodes, target.n)
    a = _design_matrix(zs, target.angles)
    b = target.samples
    n_nodes = len(zs)

    weights = np.ones(target.n)
    ridge = opts.ridge * np.eye(n_nodes)
    coef = np.zeros(n_nodes, dtype=np.complex128)
    previous = math.inf
    residual_l1 = math.inf

    for iteration in range(1, opts.max_iter + 1):
        aw = a * weights[:, None]
        gram = aw.T @ a + ridge
        rhs = aw.T @ b
        if opts.real_coefficients:
            rhs = rhs.real
        try:
            solved = np.linalg.solve(gram, rhs)
        except np.linalg.LinAlgError as exc:
            return FitResult(zs, coef, float(residual_l1), iteration, False, f"solver failed: {exc}")
        coef = solved.astype(np.complex128)
        residual = b - a @ coef
        residual_l1 = float(np.mean(np.abs(residual)))
        if abs(previous - residual_l1) < opts.tol:
            return FitResult(zs, coef, residual_l1, iteration, True)
        previous = residual_l1
        weights = 1.0 / np.maximum(np.abs(residual), opts.eps)

    return FitResult(zs, coef, residual_l1, opts.max_iter, False, "iteration cap reached")


def residual_curve(target: UnitGridFunction, node_counts, r_node, opts: FitOptions | None = None) -> list:
    """Fit residuals for growing equiangular node families at one radius.

    Node angles follow the grid convention (-pi + 2*pi*j/m), so doubling
    counts give nested families and the residuals cannot increase beyond
    solver tolerance.
    """
    counts = tuple(int(m) for m in node_counts)
    if not counts or any(m < 1 for m in counts):
        raise ValueError("node counts must be positive integers")
    if any(m2 <= m1 for m1, m2 in zip(counts, counts[1:])):
        raise ValueError("node counts must be strictly increasing")
    r_node = float(r_node)
    if not 0.0 <= r_node < 1.0:
        raise ValueError(f"node radius must lie in [0, 1), got {r_node}")
    residuals = []
    for m in counts:
        nodes = [DiskPoint(r_node, -math.pi + 2.0 * math.pi * j / m) for j in range(m)]
        residuals.append(fit_span(target, nodes, opts).residual_l1)
    return residuals
