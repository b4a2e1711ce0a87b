"""Density-peak initialized K-means with kernel distances.

Pipeline: pairwise distances -> density profile (rho, delta, gamma) ->
center selection (top-k, gamma jump, or decision-graph rectangle) ->
kernel-distance K-means, benchmarked against random-init Lloyd.
"""

from .bench import AlgorithmStats, BenchmarkReport, RunRecord, run_benchmark
from .centers import CenterSelection, select_by_jump, select_by_rectangle, select_top_k
from .clustering import ClusteringResult, criterion_E, improved_kmeans, kmeans_baseline
from .dataset import Dataset, LabelMatching, accuracy, load_csv, load_distance_file, normalize
from .density import (
    DensityProfile,
    build_profile,
    compute_delta,
    compute_gamma,
    local_density_cutoff,
    local_density_gaussian,
    select_dc,
)
from .distance import (
    KernelSpec,
    PairwiseDistances,
    centroid_power_distance,
    cpd_kernel,
    kernel_cluster_distance,
    pairwise_euclidean,
    verify_cpd,
)
from .errors import AlgorithmError, DataError, DpkmeansError

__version__ = "0.1.0"

__all__ = [
    "AlgorithmError",
    "AlgorithmStats",
    "BenchmarkReport",
    "CenterSelection",
    "ClusteringResult",
    "DataError",
    "Dataset",
    "DensityProfile",
    "DpkmeansError",
    "KernelSpec",
    "LabelMatching",
    "PairwiseDistances",
    "RunRecord",
    "accuracy",
    "build_profile",
    "centroid_power_distance",
    "compute_delta",
    "compute_gamma",
    "cpd_kernel",
    "criterion_E",
    "improved_kmeans",
    "kernel_cluster_distance",
    "kmeans_baseline",
    "load_csv",
    "load_distance_file",
    "local_density_cutoff",
    "local_density_gaussian",
    "normalize",
    "pairwise_euclidean",
    "run_benchmark",
    "select_by_jump",
    "select_by_rectangle",
    "select_dc",
    "select_top_k",
    "verify_cpd",
]
