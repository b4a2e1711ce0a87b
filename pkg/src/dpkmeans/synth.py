"""Seeded synthetic datasets for demos and behavioral tests."""

from __future__ import annotations

import numpy as np

from .dataset import Dataset


def two_blobs(
    n_per_blob: int = 10,
    separation: float = 20.0,
    radius: float = 0.5,
    seed: int = 0,
) -> Dataset:
    """Two tight isotropic 2-D blobs; separation defaults to 20x their radius.

    Labels are the blob ids, so perfect clustering gives accuracy 1.0.
    """
    rng = np.random.default_rng(seed)
    scale = radius / 2.0  # points stay well within `radius` of their center
    first = rng.normal(0.0, scale, size=(n_per_blob, 2))
    second = rng.normal(0.0, scale, size=(n_per_blob, 2)) + np.array([separation, 0.0])
    points = np.vstack([first, second])
    labels = np.array([0] * n_per_blob + [1] * n_per_blob)
    return Dataset(points, labels=labels, feature_names=("x", "y"), name="two_blobs")


def two_arcs(n: int = 120, noise: float = 0.08, seed: int = 0) -> Dataset:
    """Two interleaving half-circle arcs; a non-spherical shape K-means splits badly."""
    rng = np.random.default_rng(seed)
    half = n // 2
    theta_top = np.linspace(0.0, np.pi, half)
    theta_bottom = np.linspace(0.0, np.pi, n - half)
    top = np.column_stack([np.cos(theta_top), np.sin(theta_top)])
    bottom = np.column_stack([1.0 - np.cos(theta_bottom), 0.5 - np.sin(theta_bottom)])
    points = np.vstack([top, bottom]) + rng.normal(0.0, noise, size=(n, 2))
    labels = np.array([0] * half + [1] * (n - half))
    return Dataset(points, labels=labels, feature_names=("x", "y"), name="two_arcs")
