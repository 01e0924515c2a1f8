"""Barycentric interpolation with a shrinkage factor.

Two evaluation forms of the same degree-N interpolant through N+1 nodes:

    modified Lagrange   p(x) = l(x)/(1+lambda) * sum_j W_j f_j / (x - x_j)
    quotient form       p(x) = [sum_j W_j f_j/(x-x_j)] / [(1+lambda) sum_j W_j/(x-x_j)]

with l(x) the node polynomial and W_j the barycentric weights
1/prod_{k != j}(x_j - x_k).  The quotient form is invariant under common
rescaling of the weights; the modified Lagrange form is not, so it re-anchors
whatever weights it is given to the product-formula scale.  lambda = 0 gives
the classical interpolant; lambda > 0 multiplies it by 1/(1+lambda).
"""

from dataclasses import dataclass

import numpy as np

from .basis import eval_orthonormal
from .quadrature import QuadratureRule

__all__ = [
    "BarycentricData",
    "weights_product",
    "weights_gauss",
    "interp_modified_lagrange",
    "interp_barycentric",
]

# beyond this many nodes raw products of ~N factors risk leaving double range
_DIRECT_PRODUCT_LIMIT = 513

_BLOCK = 1024  # grid chunking for the (points x nodes) difference tables


def weights_product(nodes) -> np.ndarray:
    """Barycentric weights 1/prod_{k != j}(x_j - x_k) from the definition.

    Up to 513 nodes the products are formed directly and returned at their
    natural scale.  Past that the magnitudes can overflow doubles, so the
    products are accumulated as log-magnitude plus sign and the result is
    rescaled to max |W_j| = 1.
    """
    nodes = np.asarray(nodes, dtype=float)
    if nodes.ndim != 1 or nodes.size < 2:
        raise ValueError("need at least two nodes")
    diffs = nodes[:, None] - nodes[None, :]
    off = ~np.eye(nodes.size, dtype=bool)
    if np.any(diffs[off] == 0.0):
        raise ValueError("nodes must be pairwise distinct")
    if nodes.size <= _DIRECT_PRODUCT_LIMIT:
        prod = np.prod(np.where(off, diffs, 1.0), axis=1)
        return 1.0 / prod
    signs = np.where(np.sum(diffs < 0.0, axis=1) % 2 == 0, 1.0, -1.0)
    logs = -np.sum(np.log(np.abs(np.where(off, diffs, 1.0))), axis=1)
    return signs * np.exp(logs - np.max(logs))


def weights_gauss(rule: QuadratureRule) -> np.ndarray:
    """Weights from the quadrature relation W_j proportional to w_j p_N(x_j).

    One recurrence sweep instead of the O(N^2) product formula.  The output
    shares only a common scalar factor with weights_product, which is all the
    quotient form needs; the modified Lagrange form re-anchors the scale
    itself.
    """
    n = rule.degree
    phi_n = eval_orthonormal(rule.spec, n, rule.nodes)[n]
    return rule.weights * phi_n


@dataclass(frozen=True, eq=False)
class BarycentricData:
    """Nodes, weights, samples and the shrinkage parameter, validated once.

    Weights are normalized to max |W_j| = 1 on construction; both evaluation
    forms are indifferent to that common factor.
    """

    nodes: np.ndarray
    weights: np.ndarray
    values: np.ndarray
    lam: float = 0.0

    def __post_init__(self):
        nodes = np.asarray(self.nodes, dtype=float)
        weights = np.asarray(self.weights, dtype=float)
        values = np.asarray(self.values, dtype=float)
        if nodes.ndim != 1 or nodes.size < 2:
            raise ValueError("need at least two nodes")
        if weights.shape != nodes.shape or values.shape != nodes.shape:
            raise ValueError("weights and values must align with nodes")
        if np.any(np.diff(nodes) <= 0.0):
            raise ValueError("nodes must be strictly increasing")
        if np.any(weights == 0.0) or not np.all(np.isfinite(weights)):
            raise ValueError("weights must be nonzero and finite")
        if np.any(weights[:-1] * weights[1:] >= 0.0):
            raise ValueError("weights must strictly alternate in sign")
        if not np.all(np.isfinite(values)):
            raise ValueError("values must be finite")
        if self.lam < 0.0:
            raise ValueError("lambda must be >= 0")
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "weights", weights / np.max(np.abs(weights)))
        object.__setattr__(self, "values", values)

    def __len__(self):
        return self.nodes.size


def _product_scale_anchor(data: BarycentricData) -> tuple[float, float]:
    """Log-magnitude and sign of the factor mapping stored weights to product scale.

    Computed at the index of largest stored weight: the true product-formula
    weight there, divided by the stored one.
    """
    j = int(np.argmax(np.abs(data.weights)))
    diffs = data.nodes[j] - data.nodes
    diffs = np.delete(diffs, j)
    log_true = -np.sum(np.log(np.abs(diffs)))
    sign_true = -1.0 if (np.sum(diffs < 0.0) % 2) else 1.0
    stored = data.weights[j]
    return log_true - np.log(abs(stored)), sign_true * np.sign(stored)


def interp_modified_lagrange(data: BarycentricData, x):
    """Evaluate l(x)/(1+lambda) * sum_j W_j f_j/(x - x_j) at x.

    A point that equals a node exactly returns f_j/(1+lambda); there is no
    epsilon ball, nearby points go through the formula, which is stable.
    The node polynomial and the scale anchor are carried in log space when
    the node count is large.
    """
    x = np.asarray(x, dtype=float)
    scalar = x.ndim == 0
    xv = np.atleast_1d(x).ravel()
    shrink = 1.0 + data.lam
    log_c, sign_c = _product_scale_anchor(data)
    out = np.empty(xv.size)
    for start in range(0, xv.size, _BLOCK):
        block = xv[start : start + _BLOCK]
        diffs = block[:, None] - data.nodes[None, :]
        hit_rows, hit_cols = np.nonzero(diffs == 0.0)
        safe = diffs.copy()
        safe[hit_rows, hit_cols] = 1.0
        inner = (data.weights * data.values / safe).sum(axis=1)
        if len(data) <= _DIRECT_PRODUCT_LIMIT:
            node_poly = np.prod(diffs, axis=1) * (sign_c * np.exp(log_c))
        else:
            log_poly = np.sum(np.log(np.abs(safe)), axis=1)
            sign_poly = np.where(np.sum(diffs < 0.0, axis=1) % 2 == 0, 1.0, -1.0)
            node_poly = sign_poly * sign_c * np.exp(log_poly + log_c)
        vals = node_poly * inner / shrink
        vals[hit_rows] = data.values[hit_cols] / shrink
        out[start : start + _BLOCK] = vals
    return float(out[0]) if scalar else out.reshape(np.atleast_1d(x).shape)


def interp_barycentric(data: BarycentricData, x):
    """Evaluate the quotient form at x; scale of the weights is immaterial.

    A point equal to a node returns f_j/(1+lambda).  For real distinct nodes
    with alternating weights the denominator cannot vanish off the nodes; a
    zero there means corrupted data and raises.
    """
    x = np.asarray(x, dtype=float)
    scalar = x.ndim == 0
    xv = np.atleast_1d(x).ravel()
    shrink = 1.0 + data.lam
    out = np.empty(xv.size)
    for start in range(0, xv.size, _BLOCK):
        block = xv[start : start + _BLOCK]
        diffs = block[:, None] - data.nodes[None, :]
        hit_rows, hit_cols = np.nonzero(diffs == 0.0)
        safe = diffs.copy()
        safe[hit_rows, hit_cols] = 1.0
        ratios = data.weights / safe
        numer = (ratios * data.values).sum(axis=1)
        denom = ratios.sum(axis=1)
        denom[hit_rows] = 1.0  # masked below
        if np.any(denom == 0.0):
            raise RuntimeError(
                "barycentric denominator vanished off-node; weights are inconsistent"
            )
        vals = numer / (shrink * denom)
        vals[hit_rows] = data.values[hit_cols] / shrink
        out[start : start + _BLOCK] = vals
    return float(out[0]) if scalar else out.reshape(np.atleast_1d(x).shape)
