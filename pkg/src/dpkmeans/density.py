"""Decision-graph machinery: truncation distance, local densities, delta, gamma.

For every point the profile carries a local density rho (how crowded its
neighborhood is at radius dc) and a delta value (how far the nearest denser
point is). Cluster-center candidates score high on both; the gamma product
ranks them.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .distance import PairwiseDistances
from .errors import AlgorithmError

DENSITY_KERNELS = ("gaussian", "cutoff")
DEFAULT_T = 0.02


@dataclass(frozen=True)
class DensityProfile:
    """Per-point rho, delta, gamma plus the nearest higher-density neighbor.

    `nneigh` holds -1 for the single top-density point (it has no denser
    neighbor; its delta is the maximum of all other deltas).
    """

    rho: np.ndarray
    delta: np.ndarray
    nneigh: np.ndarray
    gamma: np.ndarray
    dc: float
    kernel: str

    def __post_init__(self):
        for name in ("rho", "delta", "nneigh", "gamma"):
            arr = getattr(self, name)
            arr.setflags(write=False)

    @property
    def n(self) -> int:
        return self.rho.shape[0]

    def decision_graph_text(self) -> str:
        """Legacy two-column export, one '%6.2f %6.2f' (rho, delta) line per point."""
        return "".join("%6.2f %6.2f\n" % (r, d) for r, d in zip(self.rho, self.delta))

    def to_points(self) -> list[dict]:
        return [
            {
                "i": i,
                "rho": float(self.rho[i]),
                "delta": float(self.delta[i]),
                "gamma": float(self.gamma[i]),
                "nneigh": int(self.nneigh[i]) if self.nneigh[i] >= 0 else None,
            }
            for i in range(self.n)
        ]

    def to_json(self) -> str:
        payload = {
            "points": self.to_points(),
            "dc": self.dc,
            "kernel": self.kernel,
        }
        return json.dumps(payload, sort_keys=True)


def select_dc(dist: PairwiseDistances, t: float) -> float:
    """Truncation distance: the round(M*t)-th smallest of the M pairwise distances.

    t is the desired average neighbor fraction (around 0.01-0.02); the
    position is rounded half away from zero and clamped to [1, M].
    """
    if dist.n < 2:
        raise AlgorithmError("truncation distance needs at least 2 points")
    if not 0.0 < t < 1.0:
        raise ValueError(f"neighbor fraction t={t} outside (0, 1)")
    ordered = np.sort(dist.condensed())
    m = ordered.size
    position = min(max(int(math.floor(m * t + 0.5)), 1), m)
    dc = float(ordered[position - 1])
    if dc <= 0.0:
        raise AlgorithmError(
            f"degenerate truncation distance 0 at position {position}/{m}: the "
            "smallest t-fraction of pairs coincide; raise t or deduplicate points"
        )
    return dc


def local_density_cutoff(dist: PairwiseDistances, dc: float) -> np.ndarray:
    """Number of other points strictly closer than dc (integer-valued)."""
    if dc <= 0:
        raise ValueError("dc must be > 0")
    # diagonal zeros always pass the strict test; drop the self count
    return (dist.d < dc).sum(axis=1).astype(float) - 1.0


def local_density_gaussian(dist: PairwiseDistances, dc: float) -> np.ndarray:
    """Smooth density sum_{j != i} exp(-(d_ij/dc)^2)."""
    if dc <= 0:
        raise ValueError("dc must be > 0")
    weights = np.exp(-((dist.d / dc) ** 2))
    return weights.sum(axis=1) - 1.0  # exp(0) on the diagonal


def compute_delta(dist: PairwiseDistances, rho) -> tuple[np.ndarray, np.ndarray]:
    """Distance to the nearest point of higher density, in descending-rho order.

    Ties in rho are broken by ascending point index, which makes the whole
    pipeline deterministic. The top-density point gets the maximum of all
    other deltas and nneigh -1; every other point gets the minimum distance
    to any point ranked before it (first such point on distance ties).
    """
    rho = np.asarray(rho, dtype=float)
    n = dist.n
    if rho.shape != (n,):
        raise ValueError(f"rho has shape {rho.shape}, expected ({n},)")
    if not np.isfinite(rho).all():
        raise ValueError("rho contains NaN or Inf")
    order = np.lexsort((np.arange(n), -rho))
    delta = np.zeros(n)
    nneigh = np.full(n, -1, dtype=np.int64)
    for rank in range(1, n):
        i = order[rank]
        earlier = order[:rank]
        to_earlier = dist.d[i, earlier]
        best = int(np.argmin(to_earlier))  # first minimum = earliest rank
        delta[i] = to_earlier[best]
        nneigh[i] = earlier[best]
    if n > 1:
        top = order[0]
        delta[top] = np.delete(delta, top).max()
    return delta, nneigh


def compute_gamma(rho, delta) -> np.ndarray:
    """Elementwise rho * delta; the center-candidate score."""
    rho = np.asarray(rho, dtype=float)
    delta = np.asarray(delta, dtype=float)
    if rho.shape != delta.shape:
        raise ValueError(f"rho has shape {rho.shape}, delta {delta.shape}")
    return rho * delta


def build_profile(
    dist: PairwiseDistances, t: float = DEFAULT_T, kernel: str = "gaussian"
) -> DensityProfile:
    """Run the full rho/delta/gamma pipeline over a distance table."""
    if kernel not in DENSITY_KERNELS:
        raise ValueError(f"unknown density kernel {kernel!r}, expected one of {DENSITY_KERNELS}")
    if dist.n < 2:
        raise AlgorithmError("density profile needs at least 2 points")
    dc = select_dc(dist, t)
    if kernel == "gaussian":
        rho = local_density_gaussian(dist, dc)
    else:
        rho = local_density_cutoff(dist, dc)
    delta, nneigh = compute_delta(dist, rho)
    gamma = compute_gamma(rho, delta)
    return DensityProfile(rho=rho, delta=delta, nneigh=nneigh, gamma=gamma, dc=dc, kernel=kernel)
