"""Baseline random-init K-means and the density-seeded kernel-distance variant.

Both report the same criterion function E (within-cluster sum of squared
Euclidean deviations from arithmetic-mean centroids), so their results are
directly comparable regardless of the metric used during assignment.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

import numpy as np
from scipy.spatial.distance import cdist, pdist, squareform

from .centers import CenterSelection
from .dataset import Dataset
from .distance import KernelSpec

MODES = ("iterate", "single_pass")
DEFAULT_MAX_ITER = 300
DEFAULT_TOL = 1e-6


@dataclass(frozen=True)
class ClusteringResult:
    """Final assignment, centroids, and bookkeeping for one clustering run."""

    assignment: np.ndarray
    centroids: np.ndarray
    criterion_e: float
    iterations: int
    converged: bool
    elapsed_ms: float
    algorithm: str
    seed: int | None = None
    empty_cluster_reseeds: int = 0
    e_history: tuple[float, ...] = ()
    config: dict = field(default_factory=dict)

    def __post_init__(self):
        self.assignment.setflags(write=False)
        self.centroids.setflags(write=False)

    @property
    def k(self) -> int:
        return self.centroids.shape[0]

    def to_dict(self, include_timing: bool = True) -> dict:
        payload = {
            "algorithm": self.algorithm,
            "assignment": [int(a) for a in self.assignment],
            "centroids": [[float(v) for v in row] for row in self.centroids],
            "criterion_e": self.criterion_e,
            "iterations": self.iterations,
            "converged": self.converged,
            "empty_cluster_reseeds": self.empty_cluster_reseeds,
            "seed": self.seed,
            "config": self.config,
        }
        if include_timing:
            payload["elapsed_ms"] = self.elapsed_ms
        return payload

    def to_json(self, include_timing: bool = True) -> str:
        """JSON form; without timing it is byte-identical across repeated runs."""
        return json.dumps(self.to_dict(include_timing), sort_keys=True)


def criterion_E(data: Dataset, assignment, centroids) -> float:
    """Within-cluster sum of squared Euclidean deviations from the given centroids."""
    assignment = np.asarray(assignment)
    centroids = np.atleast_2d(np.asarray(centroids, dtype=float))
    if assignment.shape != (data.n,):
        raise ValueError(f"assignment has shape {assignment.shape}, expected ({data.n},)")
    if centroids.shape[1] != data.dim:
        raise ValueError(
            f"centroids have dimension {centroids.shape[1]}, data has {data.dim}"
        )
    if assignment.min() < 0 or assignment.max() >= centroids.shape[0]:
        raise ValueError("assignment refers to a cluster id without a centroid")
    deviations = data.points - centroids[assignment]
    return float((deviations**2).sum())


def _mean_centroids(points: np.ndarray, assignment: np.ndarray, k: int) -> np.ndarray:
    centroids = np.empty((k, points.shape[1]))
    for c in range(k):
        centroids[c] = points[assignment == c].mean(axis=0)
    return centroids


def _fill_empty_clusters(metric: np.ndarray, assignment: np.ndarray, k: int) -> int:
    """Reseed each empty cluster with the point farthest from its assigned center.

    `metric` is the (n, k) table of whatever distance drove the assignment.
    Donor points are only taken from clusters that keep at least 2 members.
    Returns the number of reseeds performed.
    """
    reseeds = 0
    for c in range(k):
        if (assignment == c).any():
            continue
        current = metric[np.arange(assignment.size), assignment]
        counts = np.bincount(assignment, minlength=k)
        movable = counts[assignment] > 1
        if not movable.any():
            raise RuntimeError("cannot reseed empty cluster: all clusters are singletons")
        donor = int(np.argmax(np.where(movable, current, -np.inf)))
        assignment[donor] = c
        reseeds += 1
    return reseeds


def _lloyd(points: np.ndarray, initial_centroids: np.ndarray, max_iter: int, tol: float):
    """Plain Lloyd iterations from explicit starting centroids.

    Returns (assignment, centroids, iterations, converged, e_history, reseeds).
    e_history holds E after every update step; it is non-increasing except
    possibly across an empty-cluster reseed.
    """
    centroids = np.array(initial_centroids, dtype=float)
    k = centroids.shape[0]
    assignment = None
    e_history: list[float] = []
    reseeds = 0
    converged = False
    iterations = 0
    for iteration in range(1, max_iter + 1):
        d2 = cdist(points, centroids, metric="sqeuclidean")
        new_assignment = np.argmin(d2, axis=1)
        reseeds += _fill_empty_clusters(d2, new_assignment, k)
        if assignment is not None and np.array_equal(new_assignment, assignment):
            converged = True
            break
        assignment = new_assignment
        new_centroids = _mean_centroids(points, assignment, k)
        shift = float(np.linalg.norm(new_centroids - centroids, axis=1).max())
        centroids = new_centroids
        deviations = points - centroids[assignment]
        e_history.append(float((deviations**2).sum()))
        iterations = iteration
        if shift < tol:
            converged = True
            break
    return assignment, centroids, iterations, converged, tuple(e_history), reseeds


def kmeans_baseline(
    data: Dataset,
    k: int,
    seed: int,
    max_iter: int = DEFAULT_MAX_ITER,
    tol: float = DEFAULT_TOL,
) -> ClusteringResult:
    """Lloyd's algorithm from k distinct data points sampled with the given seed."""
    if not 1 <= k <= data.n:
        raise ValueError(f"k={k} out of range [1, {data.n}]")
    if max_iter < 1:
        raise ValueError("max_iter must be >= 1")
    if tol < 0:
        raise ValueError("tol must be >= 0")
    rng = np.random.default_rng(seed)
    start = time.perf_counter()
    chosen = rng.choice(data.n, size=k, replace=False)
    assignment, centroids, iterations, converged, e_history, reseeds = _lloyd(
        data.points, data.points[chosen], max_iter, tol
    )
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    return ClusteringResult(
        assignment=assignment,
        centroids=centroids,
        criterion_e=criterion_E(data, assignment, centroids),
        iterations=iterations,
        converged=converged,
        elapsed_ms=elapsed_ms,
        algorithm="baseline",
        seed=int(seed),
        empty_cluster_reseeds=reseeds,
        e_history=e_history,
        config={"k": int(k), "max_iter": max_iter, "tol": tol},
    )


def _kernel_distances(powered: np.ndarray, assignment: np.ndarray, k: int) -> np.ndarray:
    """Feature-space distance of every point to every cluster.

    With A = d^q the expansion is D[i, c] = (2/m_c) sum_{j in c} A[i, j]
    - (1/m_c^2) sum_{j, l in c} A[j, l]; vectorized via one-hot membership.
    """
    onehot = np.zeros((assignment.size, k))
    onehot[np.arange(assignment.size), assignment] = 1.0
    sizes = onehot.sum(axis=0)
    cross = powered @ onehot
    within = np.einsum("ic,ij,jc->c", onehot, powered, onehot)
    return 2.0 * cross / sizes - within / sizes**2


def _point_mode_distances(
    points: np.ndarray, assignment: np.ndarray, k: int, q: float
) -> np.ndarray:
    """Literal ||x - centroid||^q against arithmetic-mean centroids."""
    centroids = _mean_centroids(points, assignment, k)
    return cdist(points, centroids) ** q


def improved_kmeans(
    data: Dataset,
    centers: CenterSelection,
    kernel: KernelSpec = KernelSpec(),
    mode: str = "iterate",
    max_iter: int = DEFAULT_MAX_ITER,
    tol: float = DEFAULT_TOL,
    point_mode: bool = False,
) -> ClusteringResult:
    """Kernel-distance K-means seeded with density-selected centers.

    The selected points start as singleton clusters; every point is then
    assigned to the cluster at minimal kernel-induced distance. `single_pass`
    stops there, `iterate` repeats assignment against the updated memberships
    until stable. Fully deterministic: no randomness anywhere.
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}, expected one of {MODES}")
    if centers.k == 0:
        raise ValueError("no centers selected")
    idx = np.asarray(centers.center_indices)
    if idx.min() < 0 or idx.max() >= data.n:
        raise ValueError(f"center index out of range for {data.n} points")
    k = centers.k

    start = time.perf_counter()
    points = data.points
    powered = None
    if not point_mode:
        full = squareform(pdist(points)) if data.n > 1 else np.zeros((1, 1))
        powered = full**kernel.q

    member_assignment = None  # first round measures against the singleton seeds
    reseeds = 0
    converged = False
    iterations = 0
    for iteration in range(1, max_iter + 1):
        if member_assignment is None:
            if point_mode:
                metric = cdist(points, points[idx]) ** kernel.q
            else:
                metric = 2.0 * powered[:, idx]
        elif point_mode:
            metric = _point_mode_distances(points, member_assignment, k, kernel.q)
        else:
            metric = _kernel_distances(powered, member_assignment, k)
        new_assignment = np.argmin(metric, axis=1)
        reseeds += _fill_empty_clusters(metric, new_assignment, k)
        iterations = iteration
        if member_assignment is not None and np.array_equal(new_assignment, member_assignment):
            converged = True
            break
        previous = member_assignment
        member_assignment = new_assignment
        if mode == "single_pass":
            converged = True
            break
        if previous is not None:
            shift = np.linalg.norm(
                _mean_centroids(points, member_assignment, k)
                - _mean_centroids(points, previous, k),
                axis=1,
            ).max()
            if shift < tol:
                converged = True
                break

    centroids = _mean_centroids(points, member_assignment, k)
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    label = "improved-point" if point_mode else "improved"
    return ClusteringResult(
        assignment=member_assignment,
        centroids=centroids,
        criterion_e=criterion_E(data, member_assignment, centroids),
        iterations=iterations,
        converged=converged,
        elapsed_ms=elapsed_ms,
        algorithm=f"{label}(q={kernel.q:g}, mode={mode})",
        seed=None,
        empty_cluster_reseeds=reseeds,
        config={
            "k": k,
            "q": kernel.q,
            "mode": mode,
            "point_mode": point_mode,
            "center_method": centers.method,
            "center_params": centers.params,
            "center_indices": [int(i) for i in centers.center_indices],
            "max_iter": max_iter,
            "tol": tol,
        },
    )
