"""Turning a density profile into initial cluster centers.

Three routes: take the k largest-gamma points, detect k automatically from
the largest consecutive ratio in the descending gamma sequence, or apply the
interactive rectangle rule (all points right of rho_min and above delta_min
on the decision graph).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .density import DensityProfile
from .errors import AlgorithmError

DEFAULT_MAX_K = 10


@dataclass(frozen=True)
class CenterSelection:
    """Chosen center point indices plus the method and parameters that produced them."""

    center_indices: tuple[int, ...]
    method: str
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if len(set(self.center_indices)) != len(self.center_indices):
            raise ValueError("center indices must be distinct")

    @property
    def k(self) -> int:
        return len(self.center_indices)


def _gamma_order(profile: DensityProfile) -> np.ndarray:
    """Indices by descending gamma, ties broken by ascending point index."""
    return np.lexsort((np.arange(profile.n), -profile.gamma))


def select_top_k(profile: DensityProfile, k: int) -> CenterSelection:
    """The k largest-gamma points, in descending-gamma order."""
    if not 1 <= k <= profile.n:
        raise ValueError(f"k={k} out of range [1, {profile.n}]")
    order = _gamma_order(profile)
    return CenterSelection(
        center_indices=tuple(int(i) for i in order[:k]),
        method="gamma_top_k",
        params={"k": k},
    )


def select_by_jump(profile: DensityProfile, max_k: int | None = None) -> CenterSelection:
    """Choose k at the largest consecutive ratio of the descending gamma sequence.

    Scale-free by construction: multiplying every gamma by a positive constant
    leaves all ratios, and therefore the chosen k, unchanged.
    """
    n = profile.n
    if n < 3:
        raise AlgorithmError(f"jump detection needs at least 3 points, got {n}")
    if max_k is None:
        max_k = min(DEFAULT_MAX_K, n - 1)
    if not 2 <= max_k <= n - 1:
        raise ValueError(f"max_k={max_k} out of range [2, {n - 1}]")
    order = _gamma_order(profile)
    g = profile.gamma[order]
    if np.all(g == g[0]):
        raise AlgorithmError(
            "all gamma values are equal: no clear center structure; pass an explicit k"
        )
    eps = np.finfo(float).eps
    ratios = g[:max_k] / np.maximum(g[1 : max_k + 1], eps)
    k = int(np.argmax(ratios)) + 1
    return CenterSelection(
        center_indices=tuple(int(i) for i in order[:k]),
        method="gamma_jump",
        params={"k": k, "max_k": max_k, "ratio": float(ratios[k - 1])},
    )


def select_by_rectangle(
    profile: DensityProfile, rho_min: float, delta_min: float
) -> CenterSelection:
    """All points with rho > rho_min and delta > delta_min (strict), in index order.

    The thresholds are the lower-left corner of a rectangle drawn on the
    decision graph; only that corner matters (quadrant semantics).
    """
    chosen = np.flatnonzero((profile.rho > rho_min) & (profile.delta > delta_min))
    if chosen.size == 0:
        raise AlgorithmError("rectangle excludes all points")
    return CenterSelection(
        center_indices=tuple(int(i) for i in chosen),
        method="rectangle",
        params={"rho_min": float(rho_min), "delta_min": float(delta_min)},
    )
