"""Orthonormal Jacobi-family polynomials and the Christoffel-Darboux kernel.

The weight function is w(x) = (1-x)^a (1+x)^b on [-1,1] with a, b > -1.
Everything downstream (quadrature, fitting, barycentric weights) is built
on the three-term recurrence evaluated here.
"""

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "BasisSpec",
    "RecurrenceTable",
    "recurrence_coefficients",
    "eval_orthonormal",
    "norm_ratio",
    "cd_kernel",
    "cd_kernel_quotient",
]


@dataclass(frozen=True)
class BasisSpec:
    """Jacobi weight w(x) = (1-x)^jacobi_a (1+x)^jacobi_b, exponents > -1."""

    jacobi_a: float = 0.0
    jacobi_b: float = 0.0

    def __post_init__(self):
        if not (self.jacobi_a > -1.0 and self.jacobi_b > -1.0):
            raise ValueError(
                f"weight exponents must exceed -1, got a={self.jacobi_a}, b={self.jacobi_b}"
            )

    @staticmethod
    def chebyshev1() -> "BasisSpec":
        return BasisSpec(-0.5, -0.5)

    @staticmethod
    def legendre() -> "BasisSpec":
        return BasisSpec(0.0, 0.0)

    @staticmethod
    def from_name(name: str) -> "BasisSpec":
        key = name.strip().lower()
        if key in ("chebyshev1", "chebyshev-1st", "cheb1"):
            return BasisSpec.chebyshev1()
        if key == "legendre":
            return BasisSpec.legendre()
        raise ValueError(f"unknown basis name: {name!r} (use chebyshev1 or legendre)")

    @property
    def name(self) -> str:
        if (self.jacobi_a, self.jacobi_b) == (-0.5, -0.5):
            return "chebyshev1"
        if (self.jacobi_a, self.jacobi_b) == (0.0, 0.0):
            return "legendre"
        return f"jacobi({self.jacobi_a:g},{self.jacobi_b:g})"

    @property
    def is_symmetric(self) -> bool:
        return self.jacobi_a == self.jacobi_b

    @property
    def mass(self) -> float:
        """V = integral of w over [-1,1]; pi for chebyshev1, 2 for legendre."""
        a, b = self.jacobi_a, self.jacobi_b
        # 2^(a+b+1) B(a+1, b+1), via log-gamma to stay in range for large exponents
        return math.exp(
            (a + b + 1.0) * math.log(2.0)
            + math.lgamma(a + 1.0)
            + math.lgamma(b + 1.0)
            - math.lgamma(a + b + 2.0)
        )


@dataclass(frozen=True, eq=False)
class RecurrenceTable:
    """Monic three-term recurrence coefficients; b[0] stores the mass V."""

    a: np.ndarray
    b: np.ndarray

    def __post_init__(self):
        if self.a.shape != self.b.shape or self.a.ndim != 1:
            raise ValueError("coefficient arrays must be 1-d and equally sized")
        if self.b.size > 1 and not np.all(self.b[1:] > 0):
            raise ValueError("b[k] must be positive for k >= 1")

    def __len__(self):
        return self.a.size


def recurrence_coefficients(spec: BasisSpec, n: int) -> RecurrenceTable:
    """Monic Jacobi recurrence coefficients a_0..a_{n-1}, b_0..b_{n-1}.

    The monic family satisfies P_{k+1} = (x - a_k) P_k - b_k P_{k-1}, with
    b_0 = V by convention.  Closed forms in the weight exponents; the k = 1
    entry has its own expression because the generic one degenerates there.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    alpha, beta = spec.jacobi_a, spec.jacobi_b
    a = np.zeros(n)
    b = np.zeros(n)
    b[0] = spec.mass
    s0 = alpha + beta + 2.0
    a[0] = (beta - alpha) / s0
    if n > 1:
        b[1] = 4.0 * (alpha + 1.0) * (beta + 1.0) / (s0 * s0 * (s0 + 1.0))
        k = np.arange(1, n, dtype=float)
        s = 2.0 * k + alpha + beta
        a[1:] = (beta * beta - alpha * alpha) / (s * (s + 2.0))
    if n > 2:
        k = np.arange(2, n, dtype=float)
        s = 2.0 * k + alpha + beta
        b[2:] = (
            4.0 * k * (k + alpha) * (k + beta) * (k + alpha + beta)
            / (s * s * (s + 1.0) * (s - 1.0))
        )
    if spec.is_symmetric:
        a[:] = 0.0  # suppress rounding residue; symmetry forces a_k = 0
    return RecurrenceTable(a=a, b=b)


def eval_orthonormal(spec: BasisSpec, l_max: int, x) -> np.ndarray:
    """Values of the orthonormal family at x, rows l = 0..l_max.

    Uses the normalized recurrence
        sqrt(b_{k+1}) p_{k+1} = (x - a_k) p_k - sqrt(b_k) p_{k-1},
    which keeps values O(1) on [-1,1].  x may be a scalar or an array;
    the result has shape (l_max+1,) + shape(x).
    """
    if l_max < 0:
        raise ValueError("l_max must be >= 0")
    x = np.asarray(x, dtype=float)
    table = recurrence_coefficients(spec, l_max + 2)
    sqb = np.sqrt(table.b)
    out = np.empty((l_max + 1,) + x.shape)
    p_prev = np.zeros_like(x)
    p_curr = np.full_like(x, 1.0 / sqb[0])
    out[0] = p_curr
    for k in range(l_max):
        p_next = ((x - table.a[k]) * p_curr - sqb[k] * p_prev) / sqb[k + 1]
        out[k + 1] = p_next
        p_prev, p_curr = p_curr, p_next
    return out


def norm_ratio(spec: BasisSpec, n: int) -> float:
    """Leading-coefficient ratio ||P_{n+1}|| / ||P_n|| = sqrt(b_{n+1})."""
    table = recurrence_coefficients(spec, n + 2)
    return math.sqrt(table.b[n + 1])


def cd_kernel(spec: BasisSpec, L: int, x, y, quotient_threshold: float | None = None) -> np.ndarray:
    """Reproducing kernel K_L(x,y) = sum_{l<=L} p_l(x) p_l(y), direct summation.

    With quotient_threshold set, pairs separated by at least that much are
    routed through the quotient form instead; the two paths agree to
    rounding and the switch exists so tests can compare them.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    direct = np.sum(eval_orthonormal(spec, L, x) * eval_orthonormal(spec, L, y), axis=0)
    if quotient_threshold is None:
        return direct
    far = np.abs(x - y) >= quotient_threshold
    quot = cd_kernel_quotient(spec, L, x, y)
    return np.where(far, quot, direct)


def cd_kernel_quotient(spec: BasisSpec, L: int, x, y) -> np.ndarray:
    """K_L(x,y) in quotient form; ill-conditioned as x -> y, exact elsewhere.

    K_L(x,y) = sqrt(b_{L+1}) (p_{L+1}(x) p_L(y) - p_L(x) p_{L+1}(y)) / (x - y).
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    px = eval_orthonormal(spec, L + 1, x)
    py = eval_orthonormal(spec, L + 1, y)
    num = px[L + 1] * py[L] - px[L] * py[L + 1]
    return norm_ratio(spec, L) * num / (x - y)
