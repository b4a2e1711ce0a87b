"""Pairwise Euclidean distances and the negative power kernel.

The kernel k(x, y) = -||x - y||^q is conditionally positive definite for
0 < q <= 2: its quadratic form is nonnegative on zero-sum coefficient
vectors. That property is what makes the feature-space point-to-cluster
distance in `kernel_cluster_distance` well defined.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np
from scipy.spatial.distance import pdist, squareform

from .errors import DataError

if TYPE_CHECKING:
    from .dataset import Dataset

COEFF_SUM_TOL = 1e-12


@dataclass(frozen=True)
class PairwiseDistances:
    """Symmetric nonnegative N x N distance table with zero diagonal."""

    d: np.ndarray

    def __post_init__(self):
        d = np.asarray(self.d, dtype=float)
        if d.ndim != 2 or d.shape[0] != d.shape[1] or d.shape[0] < 1:
            raise DataError("distance table must be a square matrix")
        if not np.isfinite(d).all():
            raise DataError("distance table contains NaN or Inf")
        if (d < 0).any():
            raise DataError("distance table contains negative entries")
        if not np.array_equal(d, d.T):
            raise DataError("distance table is not symmetric")
        if np.diagonal(d).any():
            raise DataError("distance table has nonzero diagonal entries")
        d.setflags(write=False)
        object.__setattr__(self, "d", d)

    @property
    def n(self) -> int:
        return self.d.shape[0]

    def condensed(self) -> np.ndarray:
        """Upper-triangle distances as a flat vector of length N(N-1)/2."""
        iu = np.triu_indices(self.n, k=1)
        return self.d[iu]


@dataclass(frozen=True)
class KernelSpec:
    """Exponent q of the negative power kernel, restricted to (0, 2]."""

    q: float = 1.5

    def __post_init__(self):
        if not 0.0 < self.q <= 2.0:
            raise ValueError(
                f"kernel exponent q={self.q} outside (0, 2]: the negative power "
                "kernel is conditionally positive definite only for q <= 2, and "
                "q = 0 degenerates to a constant (every distance equals 1)"
            )


def pairwise_euclidean(data: Dataset) -> PairwiseDistances:
    """Full Euclidean distance matrix over the dataset's points."""
    pts = data.points
    if pts.shape[0] == 1:
        return PairwiseDistances(np.zeros((1, 1)))
    return PairwiseDistances(squareform(pdist(pts)))


def cpd_kernel(x: np.ndarray, y: np.ndarray, spec: KernelSpec) -> float:
    """Kernel value -||x - y||^q; zero when x == y."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != y.shape:
        raise ValueError(f"dimension mismatch: {x.shape} vs {y.shape}")
    return -float(np.linalg.norm(x - y) ** spec.q)


def verify_cpd(points, coeffs, spec: KernelSpec) -> float:
    """Quadratic form sum_ij c_i c_j k(x_i, x_j) for a zero-sum coefficient vector.

    Nonnegative (up to rounding) for every valid spec; the test suite asserts
    >= -1e-9 over random draws. Coefficients must sum to zero within 1e-12;
    callers re-center if needed.
    """
    pts = np.atleast_2d(np.asarray(points, dtype=float))
    c = np.asarray(coeffs, dtype=float)
    if pts.shape[0] != c.shape[0] or pts.shape[0] < 2:
        raise ValueError("need matching points/coeffs with at least 2 entries")
    if abs(c.sum()) > COEFF_SUM_TOL:
        raise ValueError(f"coefficients sum to {c.sum():g}, not 0 within {COEFF_SUM_TOL}")
    k = -squareform(pdist(pts)) ** spec.q
    return float(c @ k @ c)


def kernel_cluster_distance(x, members, spec: KernelSpec) -> float:
    """Kernel-induced squared feature-space distance from x to a cluster's mean.

    D(x, C) = (2/|C|) sum_y ||x-y||^q - (1/|C|^2) sum_{y,z} ||y-z||^q.
    For q = 2 this equals exactly 2 * ||x - mean(C)||^2.
    """
    x = np.asarray(x, dtype=float)
    m = np.atleast_2d(np.asarray(members, dtype=float))
    if m.shape[0] == 0:
        raise ValueError("cluster has no members")
    if m.shape[1] != x.shape[0]:
        raise ValueError(f"dimension mismatch: point has {x.shape[0]}, members have {m.shape[1]}")
    to_x = np.linalg.norm(m - x, axis=1) ** spec.q
    within = squareform(pdist(m)) ** spec.q if m.shape[0] > 1 else np.zeros((1, 1))
    size = m.shape[0]
    return float(2.0 * to_x.sum() / size - within.sum() / size**2)


def centroid_power_distance(x, centroid, spec: KernelSpec) -> float:
    """Literal point-mode distance ||x - c||^q against an explicit centroid.

    A monotone transform of the Euclidean distance, so nearest-centroid
    assignments are unchanged by q; exposed for A/B comparison only.
    """
    x = np.asarray(x, dtype=float)
    c = np.asarray(centroid, dtype=float)
    if x.shape != c.shape:
        raise ValueError(f"dimension mismatch: {x.shape} vs {c.shape}")
    return float(np.linalg.norm(x - c) ** spec.q)
