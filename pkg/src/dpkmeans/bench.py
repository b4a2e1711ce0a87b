"""Benchmark harness: seeded baseline runs against one deterministic improved run.

The report mirrors the max/min/avg table layout used for clustering accuracy
and criterion-function comparisons, with accuracies in percent.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .centers import select_top_k
from .clustering import (
    DEFAULT_MAX_ITER,
    DEFAULT_TOL,
    ClusteringResult,
    improved_kmeans,
    kmeans_baseline,
)
from .dataset import Dataset, accuracy
from .density import DEFAULT_T, build_profile
from .distance import KernelSpec, pairwise_euclidean
from .errors import DataError


@dataclass(frozen=True)
class RunRecord:
    """Per-run accuracy (percent), criterion E, and wall time."""

    seed: int | None
    accuracy_pct: float
    criterion_e: float
    elapsed_ms: float
    iterations: int

    def to_dict(self, include_timing: bool = True) -> dict:
        payload = {
            "seed": self.seed,
            "accuracy_pct": self.accuracy_pct,
            "criterion_e": self.criterion_e,
            "iterations": self.iterations,
        }
        if include_timing:
            payload["elapsed_ms"] = self.elapsed_ms
        return payload


@dataclass(frozen=True)
class AlgorithmStats:
    """Aggregate max/min/avg rows for one algorithm."""

    algorithm: str
    runs: tuple[RunRecord, ...]
    config: dict = field(default_factory=dict)

    @property
    def accuracy_max(self) -> float:
        return max(r.accuracy_pct for r in self.runs)

    @property
    def accuracy_min(self) -> float:
        return min(r.accuracy_pct for r in self.runs)

    @property
    def accuracy_avg(self) -> float:
        return sum(r.accuracy_pct for r in self.runs) / len(self.runs)

    @property
    def e_max(self) -> float:
        return max(r.criterion_e for r in self.runs)

    @property
    def e_min(self) -> float:
        return min(r.criterion_e for r in self.runs)

    @property
    def e_avg(self) -> float:
        return sum(r.criterion_e for r in self.runs) / len(self.runs)

    @property
    def time_avg_ms(self) -> float:
        return sum(r.elapsed_ms for r in self.runs) / len(self.runs)

    def to_dict(self, include_timing: bool = True) -> dict:
        payload = {
            "algorithm": self.algorithm,
            "accuracy_max": self.accuracy_max,
            "accuracy_min": self.accuracy_min,
            "accuracy_avg": self.accuracy_avg,
            "e_max": self.e_max,
            "e_min": self.e_min,
            "e_avg": self.e_avg,
            "runs": [r.to_dict(include_timing) for r in self.runs],
            "run_count": len(self.runs),
            "config": self.config,
        }
        if include_timing:
            payload["time_avg_ms"] = self.time_avg_ms
        return payload


@dataclass(frozen=True)
class BenchmarkReport:
    """Side-by-side baseline/improved statistics for one dataset."""

    dataset: str
    n: int
    k: int
    seeds: tuple[int, ...]
    baseline: AlgorithmStats
    improved: AlgorithmStats

    def to_dict(self, include_timing: bool = True) -> dict:
        return {
            "dataset": self.dataset,
            "n": self.n,
            "k": self.k,
            "seeds": list(self.seeds),
            "baseline": self.baseline.to_dict(include_timing),
            "improved": self.improved.to_dict(include_timing),
        }

    def to_json(self, include_timing: bool = True) -> str:
        """JSON form; without timing it is byte-identical for equal flags and seeds."""
        return json.dumps(self.to_dict(include_timing), sort_keys=True)

    def format_table(self) -> str:
        """Aligned text table with max/min/avg columns for accuracy and E."""
        header = (
            f"Dataset: {self.dataset} (N={self.n}, k={self.k})\n"
            f"{'Algorithm':<22}{'acc_max':>9}{'acc_min':>9}{'acc_avg':>9}"
            f"{'E_max':>12}{'E_min':>12}{'E_avg':>12}{'t_avg_ms':>10}\n"
        )
        lines = [header]
        for stats in (self.baseline, self.improved):
            name = f"{stats.algorithm} ({len(stats.runs)} run{'s' if len(stats.runs) != 1 else ''})"
            lines.append(
                f"{name:<22}{stats.accuracy_max:>9.2f}{stats.accuracy_min:>9.2f}"
                f"{stats.accuracy_avg:>9.2f}{stats.e_max:>12.4f}{stats.e_min:>12.4f}"
                f"{stats.e_avg:>12.4f}{stats.time_avg_ms:>10.2f}\n"
            )
        return "".join(lines)


def _record(result: ClusteringResult, labels) -> RunRecord:
    return RunRecord(
        seed=result.seed,
        accuracy_pct=accuracy(result.assignment, labels).accuracy * 100.0,
        criterion_e=result.criterion_e,
        elapsed_ms=result.elapsed_ms,
        iterations=result.iterations,
    )


def run_benchmark(
    data: Dataset,
    k: int,
    seeds,
    t: float = DEFAULT_T,
    density_kernel: str = "gaussian",
    kernel: KernelSpec = KernelSpec(),
    mode: str = "iterate",
    max_iter: int = DEFAULT_MAX_ITER,
    tol: float = DEFAULT_TOL,
) -> BenchmarkReport:
    """Baseline K-means once per seed, the improved algorithm once, aggregated.

    The improved run is deterministic, so its max/min/avg collapse to a single
    value; labels are required because the report is accuracy-based.
    """
    if data.labels is None:
        raise DataError(f"dataset {data.name!r} has no labels; benchmark needs ground truth")
    seeds = tuple(int(s) for s in seeds)
    if not seeds:
        raise ValueError("need at least one baseline seed")

    baseline_runs = tuple(
        _record(kmeans_baseline(data, k, seed, max_iter=max_iter, tol=tol), data.labels)
        for seed in seeds
    )
    profile = build_profile(pairwise_euclidean(data), t=t, kernel=density_kernel)
    improved_result = improved_kmeans(
        data, select_top_k(profile, k), kernel=kernel, mode=mode, max_iter=max_iter, tol=tol
    )
    improved_runs = (_record(improved_result, data.labels),)

    return BenchmarkReport(
        dataset=data.name,
        n=data.n,
        k=k,
        seeds=seeds,
        baseline=AlgorithmStats(
            algorithm="k-means",
            runs=baseline_runs,
            config={"k": k, "max_iter": max_iter, "tol": tol, "seeds": list(seeds)},
        ),
        improved=AlgorithmStats(
            algorithm="improved",
            runs=improved_runs,
            config=improved_result.config | {"t": t, "density_kernel": density_kernel},
        ),
    )
