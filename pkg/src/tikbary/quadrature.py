"""Gauss quadrature rules for Jacobi weights.

Nodes are the zeros of the degree-(N+1) orthogonal polynomial, obtained as
eigenvalues of the symmetric tridiagonal recurrence matrix; weights come from
the first eigenvector components.  Chebyshev first kind short-circuits to the
analytic rule, with the eigensolver path kept around as a cross-check.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .basis import BasisSpec, eval_orthonormal, recurrence_coefficients

__all__ = ["QuadratureRule", "gauss_rule", "gauss_rule_golub_welsch", "exactness_residual"]

# two nodes closer than this signal eigensolver breakdown
_NODE_GAP_FLOOR = 1e-14


@dataclass(frozen=True, eq=False)
class QuadratureRule:
    """Nodes (ascending, inside (-1,1)) and positive weights for a BasisSpec."""

    spec: BasisSpec
    nodes: np.ndarray
    weights: np.ndarray
    mass: float = field(init=False)

    def __post_init__(self):
        nodes = np.asarray(self.nodes, dtype=float)
        weights = np.asarray(self.weights, dtype=float)
        if nodes.ndim != 1 or nodes.shape != weights.shape or nodes.size == 0:
            raise ValueError("nodes and weights must be equal-length 1-d arrays")
        if np.any(nodes <= -1.0) or np.any(nodes >= 1.0):
            raise ValueError("nodes must lie strictly inside (-1,1)")
        if nodes.size > 1 and np.min(np.diff(nodes)) < _NODE_GAP_FLOOR:
            raise ValueError("nodes not strictly increasing or closer than 1e-14")
        if np.any(weights <= 0.0):
            raise ValueError("weights must be positive")
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "mass", self.spec.mass)

    def __len__(self):
        return self.nodes.size

    @property
    def degree(self) -> int:
        """N, so the rule has N+1 points and is exact through degree 2N+1."""
        return self.nodes.size - 1


def gauss_rule(spec: BasisSpec, points: int) -> QuadratureRule:
    """The unique (N+1)-point Gauss rule for the spec, N+1 = points.

    Chebyshev first kind uses the closed-form nodes and equal weights;
    everything else goes through the tridiagonal eigenproblem.
    """
    if points < 1:
        raise ValueError("points must be >= 1")
    if spec.name == "chebyshev1":
        j = np.arange(points)
        # ascending -cos((2j+1)pi/(2n)) written through sin so the node set
        # is exactly mirror-symmetric and an odd count gets an exact zero
        nodes = np.sin((2.0 * j + 1.0 - points) * (math.pi / (2.0 * points)))
        weights = np.full(points, math.pi / points)
        return QuadratureRule(spec=spec, nodes=nodes, weights=weights)
    return gauss_rule_golub_welsch(spec, points)


def gauss_rule_golub_welsch(spec: BasisSpec, points: int) -> QuadratureRule:
    """Generic eigen-decomposition path, valid for any spec."""
    if points < 1:
        raise ValueError("points must be >= 1")
    table = recurrence_coefficients(spec, points + 1)
    diag = table.a[:points].copy()
    off = np.sqrt(table.b[1:points])
    eigenvalues, first_row = _tridiag_eigen_first_row(diag, off)
    order = np.argsort(eigenvalues)
    nodes = eigenvalues[order]
    weights = table.b[0] * first_row[order] ** 2
    return QuadratureRule(spec=spec, nodes=nodes, weights=weights)


def exactness_residual(rule: QuadratureRule, degree: int) -> float:
    """Worst quadrature defect over the orthonormal basis of P_degree.

    Exact integrals are sqrt(V) for l = 0 and zero otherwise, so the
    residual is max_l |sum_j w_j p_l(x_j) - sqrt(V) delta_{l0}|.
    """
    if degree < 0:
        raise ValueError("degree must be >= 0")
    values = eval_orthonormal(rule.spec, degree, rule.nodes)
    sums = values @ rule.weights
    sums[0] -= math.sqrt(rule.mass)
    return float(np.max(np.abs(sums)))


def _tridiag_eigen_first_row(diag, off, max_iter: int = 50):
    """QL with implicit shifts on a symmetric tridiagonal matrix.

    Returns all eigenvalues plus the first row of the orthogonal eigenvector
    matrix, which is the only part Gauss weights need.  Rotations therefore
    update a single row vector instead of a full matrix, making each sweep
    O(n).  Raises on non-convergence (more than max_iter sweeps for one
    eigenvalue).
    """
    d = np.asarray(diag, dtype=float).copy()
    n = d.size
    e = np.zeros(n)
    e[: n - 1] = np.asarray(off, dtype=float)
    z = np.zeros(n)
    z[0] = 1.0
    eps = np.finfo(float).eps
    for l in range(n):
        iterations = 0
        while True:
            # find the first negligible off-diagonal at or beyond l
            m = l
            while m < n - 1:
                if abs(e[m]) <= eps * (abs(d[m]) + abs(d[m + 1])):
                    break
                m += 1
            if m == l:
                break
            if iterations >= max_iter:
                raise RuntimeError(
                    f"tridiagonal QL failed to converge for eigenvalue {l} "
                    f"of {n} after {max_iter} sweeps"
                )
            iterations += 1
            # implicit shift from the 2x2 block at l
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + math.copysign(r, g))
            s = 1.0
            c = 1.0
            p = 0.0
            underflow = False
            for i in range(m - 1, l - 1, -1):
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    # recover from underflow: skip the rest of this sweep
                    d[i + 1] -= p
                    e[m] = 0.0
                    underflow = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
                z_next = z[i + 1]
                z[i + 1] = s * z[i] + c * z_next
                z[i] = c * z[i] - s * z_next
            if underflow:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0
    return d, z
