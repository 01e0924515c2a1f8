"""Regularized least-squares fitting in Gauss points.

The objective  sum_j w_j (p(x_j) - f_j)^2 + lambda sum_l beta_l^2  over
polynomials p of degree L has a closed-form minimizer when the x_j are Gauss
nodes: the design matrix satisfies A'WA = I, so

    beta_l = (1/(1+lambda)) sum_j w_j p_l(x_j) f_j.

lambda = 0 recovers the plain discrete least-squares projection, which is
interpolation when L = N.  Fitting never solves a linear system; the dense
solver below exists purely as a cross-check.
"""

import math
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .basis import BasisSpec, eval_orthonormal, recurrence_coefficients
from .quadrature import QuadratureRule, gauss_rule

__all__ = [
    "RegularizedApproximant",
    "fit",
    "evaluate",
    "normal_equations_oracle",
    "gram_matrix_residual",
    "continuum_limit_fit",
    "lebesgue_constant",
    "default_lebesgue_grid",
]


@dataclass(frozen=True, eq=False)
class RegularizedApproximant:
    """Coefficient vector beta against the orthonormal basis, plus provenance."""

    spec: BasisSpec
    degree: int
    lam: float
    coefficients: np.ndarray
    rule: QuadratureRule | None = None

    def __post_init__(self):
        if self.lam < 0:
            raise ValueError("lambda must be >= 0")
        coeffs = np.asarray(self.coefficients, dtype=float)
        if coeffs.shape != (self.degree + 1,):
            raise ValueError("coefficient vector must have length degree + 1")
        object.__setattr__(self, "coefficients", coeffs)

    def __call__(self, x):
        return evaluate(self, x)

    @property
    def l2_norm(self) -> float:
        """Exact L2 norm of the polynomial: sqrt of the coefficient sum of squares."""
        return float(np.sqrt(np.sum(self.coefficients**2)))


def _check_samples(rule: QuadratureRule, samples) -> np.ndarray:
    samples = np.asarray(samples, dtype=float)
    if samples.shape != rule.nodes.shape:
        raise ValueError(
            f"sample vector length {samples.size} does not match rule size {len(rule)}"
        )
    if not np.all(np.isfinite(samples)):
        raise ValueError("samples must be finite")
    return samples


def fit(rule: QuadratureRule, L: int, lam: float, samples) -> RegularizedApproximant:
    """Closed-form coefficients from weighted sums against the basis.

    One recurrence sweep over the basis degree; per degree the weighted
    samples are folded in, so nothing of size (N+1) x (L+1) is stored.
    """
    if L < 0:
        raise ValueError("L must be >= 0")
    if L > rule.degree:
        raise ValueError(
            f"degree L={L} exceeds rule degree N={rule.degree}; "
            "the quadrature identity needs L <= N"
        )
    if lam < 0:
        raise ValueError("lambda must be >= 0")
    samples = _check_samples(rule, samples)
    wf = rule.weights * samples
    table = recurrence_coefficients(rule.spec, L + 2)
    sqb = np.sqrt(table.b)
    beta = np.empty(L + 1)
    p_prev = np.zeros_like(rule.nodes)
    p_curr = np.full_like(rule.nodes, 1.0 / sqb[0])
    beta[0] = wf @ p_curr
    for k in range(L):
        p_next = ((rule.nodes - table.a[k]) * p_curr - sqb[k] * p_prev) / sqb[k + 1]
        beta[k + 1] = wf @ p_next
        p_prev, p_curr = p_curr, p_next
    beta /= 1.0 + lam
    return RegularizedApproximant(
        spec=rule.spec, degree=L, lam=lam, coefficients=beta, rule=rule
    )


def evaluate(approx: RegularizedApproximant, x):
    """Evaluate sum_l beta_l p_l(x) in a single recurrence sweep."""
    x = np.asarray(x, dtype=float)
    scalar = x.ndim == 0
    xv = np.atleast_1d(x)
    table = recurrence_coefficients(approx.spec, approx.degree + 2)
    sqb = np.sqrt(table.b)
    beta = approx.coefficients
    p_prev = np.zeros_like(xv)
    p_curr = np.full_like(xv, 1.0 / sqb[0])
    acc = beta[0] * p_curr
    for k in range(approx.degree):
        p_next = ((xv - table.a[k]) * p_curr - sqb[k] * p_prev) / sqb[k + 1]
        acc += beta[k + 1] * p_next
        p_prev, p_curr = p_curr, p_next
    return float(acc[0]) if scalar else acc


def normal_equations_oracle(rule: QuadratureRule, L: int, lam: float, samples) -> np.ndarray:
    """Dense route: build A and W, solve (A'WA + lambda I) beta = A'W f.

    Cholesky on the (L+1) x (L+1) system.  Slower than fit by construction;
    kept only so tests can confirm the closed form against an independent
    solve.
    """
    if L > rule.degree:
        raise ValueError("degree L exceeds rule degree N")
    samples = _check_samples(rule, samples)
    A = eval_orthonormal(rule.spec, L, rule.nodes).T
    M = A.T @ (rule.weights[:, None] * A) + lam * np.eye(L + 1)
    rhs = A.T @ (rule.weights * samples)
    factor = scipy.linalg.cho_factor(M)
    return scipy.linalg.cho_solve(factor, rhs)


def gram_matrix_residual(rule: QuadratureRule, L: int) -> float:
    """Max-norm of A'WA - I, the discrete orthonormality defect."""
    if L > rule.degree:
        raise ValueError("degree L exceeds rule degree N")
    A = eval_orthonormal(rule.spec, L, rule.nodes).T
    G = A.T @ (rule.weights[:, None] * A)
    return float(np.max(np.abs(G - np.eye(L + 1))))


def continuum_limit_fit(
    spec: BasisSpec, L: int, lam: float, f, ref_points: int | None = None
) -> RegularizedApproximant:
    """Limit approximant with coefficients from near-exact integrals.

    Integrals int w p_l f are evaluated with a Gauss rule of at least 4L+16
    points, far past the exactness needed for smooth f, then shrunk by
    1/(1+lambda).  Demonstrates that fits converge to this limit as the node
    count grows.
    """
    floor = 4 * L + 16
    if ref_points is None:
        ref_points = floor
    elif ref_points < floor:
        raise ValueError(f"ref_points must be at least 4L+16 = {floor}")
    rule = gauss_rule(spec, ref_points)
    approx = fit(rule, L, lam, f(rule.nodes))
    # provenance points at the reference rule on purpose: it records how the
    # coefficients were obtained
    return approx


def default_lebesgue_grid(rule: QuadratureRule, points: int = 2001) -> np.ndarray:
    """Chebyshev-spaced scan grid plus the rule's own nodes."""
    scan = np.cos(np.linspace(0.0, math.pi, points))
    return np.union1d(scan, rule.nodes)


def lebesgue_constant(
    rule: QuadratureRule, L: int, lam: float, grid=None
) -> float:
    """Operator sup-norm restricted to a grid.

    At each grid point x the operator's pointwise norm is
    sum_j w_j |K_L(x, x_j)| with K_L the reproducing kernel; the constant is
    the grid maximum divided by (1+lambda).  The division happens exactly
    once, last, so constants for different lambda on the same grid satisfy
    the scaling law to rounding.
    """
    if L > rule.degree:
        raise ValueError("degree L exceeds rule degree N")
    if grid is None:
        grid = default_lebesgue_grid(rule)
    grid = np.asarray(grid, dtype=float)
    if grid.size == 0:
        raise ValueError("grid must be nonempty")
    node_vals = eval_orthonormal(rule.spec, L, rule.nodes)  # (L+1, N+1)
    peak = 0.0
    for start in range(0, grid.size, 4096):
        block = grid[start : start + 4096]
        kernel = eval_orthonormal(rule.spec, L, block).T @ node_vals
        lebesgue_fn = np.abs(kernel) @ rule.weights
        peak = max(peak, float(np.max(lebesgue_fn)))
    return peak / (1.0 + lam)
