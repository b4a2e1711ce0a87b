import json

import numpy as np
import pytest

from dpkmeans import (
    CenterSelection,
    Dataset,
    KernelSpec,
    accuracy,
    build_profile,
    criterion_E,
    improved_kmeans,
    kmeans_baseline,
    pairwise_euclidean,
    select_by_jump,
    select_top_k,
)
from dpkmeans.clustering import _fill_empty_clusters, _lloyd
from dpkmeans.synth import two_blobs


def centers_at(*indices):
    return CenterSelection(center_indices=tuple(indices), method="gamma_top_k")


class TestCriterionE:
    def test_two_unit_deviations(self):
        data = Dataset(np.array([[0.0], [2.0]]))
        assert criterion_E(data, [0, 0], [[1.0]]) == pytest.approx(2.0)

    def test_zero_when_every_point_is_its_centroid(self):
        data = Dataset(np.array([[1.0, 2.0], [3.0, 4.0]]))
        assert criterion_E(data, [0, 1], data.points) == 0.0

    def test_dimension_mismatch(self):
        data = Dataset(np.array([[0.0], [2.0]]))
        with pytest.raises(ValueError, match="dimension"):
            criterion_E(data, [0, 0], [[1.0, 1.0]])

    def test_assignment_bounds(self):
        data = Dataset(np.array([[0.0], [2.0]]))
        with pytest.raises(ValueError):
            criterion_E(data, [0, 2], [[1.0]])


class TestKmeansBaseline:
    def test_k_equals_n_fixed_point(self):
        data = Dataset(np.arange(6.0).reshape(-1, 2))
        result = kmeans_baseline(data, k=3, seed=0)
        assert result.criterion_e == 0.0
        assert result.iterations == 1
        assert result.converged

    @pytest.mark.parametrize("seed", [0, 1, 7, 202])
    def test_two_well_separated_pairs(self, seed):
        data = Dataset(np.array([[0.0], [1.0], [10.0], [11.0]]))
        result = kmeans_baseline(data, k=2, seed=seed)
        assert result.criterion_e == pytest.approx(1.0)
        groups = {frozenset(np.flatnonzero(result.assignment == c)) for c in range(2)}
        assert groups == {frozenset({0, 1}), frozenset({2, 3})}

    def test_deterministic_given_seed(self, iris):
        a = kmeans_baseline(iris, 3, seed=99)
        b = kmeans_baseline(iris, 3, seed=99)
        np.testing.assert_array_equal(a.assignment, b.assignment)
        assert a.to_json(include_timing=False) == b.to_json(include_timing=False)

    def test_different_seeds_explore_local_minima(self, iris):
        es = {round(kmeans_baseline(iris, 3, seed=s).criterion_e, 4) for s in range(42, 62)}
        assert len(es) > 1

    def test_e_history_non_increasing(self, iris):
        for seed in range(10):
            result = kmeans_baseline(iris, 3, seed=seed)
            assert result.empty_cluster_reseeds == 0
            assert all(
                later <= earlier + 1e-9
                for earlier, later in zip(result.e_history, result.e_history[1:])
            )

    def test_k_out_of_range(self, iris):
        with pytest.raises(ValueError):
            kmeans_baseline(iris, 151, seed=0)
        with pytest.raises(ValueError):
            kmeans_baseline(iris, 0, seed=0)

    def test_every_cluster_used(self, iris):
        for seed in range(5):
            result = kmeans_baseline(iris, 7, seed=seed)
            assert set(result.assignment.tolist()) == set(range(7))

    def test_reported_e_matches_recomputation(self, iris):
        result = kmeans_baseline(iris, 3, seed=3)
        recomputed = criterion_E(iris, result.assignment, result.centroids)
        assert abs(recomputed - result.criterion_e) < 1e-9


class TestEmptyClusterReseed:
    def test_farthest_movable_point_moves(self):
        metric = np.array([[0.0, 9.0], [1.0, 9.0], [5.0, 9.0]])
        assignment = np.array([0, 0, 0])
        reseeds = _fill_empty_clusters(metric, assignment, 2)
        assert reseeds == 1
        assert assignment.tolist() == [0, 0, 1]

    def test_singleton_clusters_are_not_drained(self):
        metric = np.array([[0.0, 1.0, 9.0], [8.0, 0.5, 9.0], [7.0, 0.2, 9.0]])
        assignment = np.array([0, 1, 1])
        _fill_empty_clusters(metric, assignment, 3)
        # donor must come from cluster 1 (two members), not singleton cluster 0
        assert assignment.tolist() == [0, 2, 1]


class TestImprovedKmeans:
    def test_two_blob_perfect_partition(self):
        blobs = two_blobs(seed=0)
        profile = build_profile(pairwise_euclidean(blobs))
        result = improved_kmeans(blobs, select_by_jump(profile), kernel=KernelSpec(1.5))
        assert accuracy(result.assignment, blobs.labels).accuracy == 1.0
        assert result.converged

    def test_deterministic_and_byte_identical(self, iris):
        profile = build_profile(pairwise_euclidean(iris))
        centers = select_top_k(profile, 3)
        runs = [
            improved_kmeans(iris, centers, kernel=KernelSpec(1.5)).to_json(include_timing=False)
            for _ in range(5)
        ]
        assert len(set(runs)) == 1

    def test_q2_matches_lloyd_from_same_seeds(self):
        rng = np.random.default_rng(33)
        for trial in range(10):
            pts = rng.normal(size=(60, 3))
            data = Dataset(pts)
            seeds = tuple(int(i) for i in rng.choice(60, size=3, replace=False))
            improved = improved_kmeans(data, centers_at(*seeds), kernel=KernelSpec(2.0))
            lloyd_assignment, *_ = _lloyd(pts, pts[list(seeds)], 300, 1e-6)
            np.testing.assert_array_equal(improved.assignment, lloyd_assignment)

    def test_point_mode_is_argmin_invariant_in_q(self):
        rng = np.random.default_rng(41)
        pts = rng.normal(size=(50, 2))
        data = Dataset(pts)
        seeds = (0, 10, 20)
        partitions = [
            improved_kmeans(
                data, centers_at(*seeds), kernel=KernelSpec(q), point_mode=True
            ).assignment.tolist()
            for q in (0.5, 1.0, 2.0)
        ]
        assert partitions[0] == partitions[1] == partitions[2]

    def test_single_pass_stops_after_one_round(self, iris):
        profile = build_profile(pairwise_euclidean(iris))
        centers = select_top_k(profile, 3)
        result = improved_kmeans(iris, centers, mode="single_pass")
        assert result.iterations == 1
        iterated = improved_kmeans(iris, centers, mode="iterate")
        assert iterated.iterations >= result.iterations

    def test_single_pass_assigns_to_nearest_seed(self):
        data = Dataset(np.array([[0.0], [1.0], [10.0], [11.0]]))
        result = improved_kmeans(data, centers_at(0, 2), mode="single_pass", kernel=KernelSpec(1.0))
        assert result.assignment.tolist() == [0, 0, 1, 1]

    def test_single_point_dataset(self):
        data = Dataset(np.array([[4.2]]))
        result = improved_kmeans(data, centers_at(0))
        assert result.criterion_e == 0.0
        assert result.assignment.tolist() == [0]

    def test_every_cluster_used(self, iris):
        profile = build_profile(pairwise_euclidean(iris))
        result = improved_kmeans(iris, select_top_k(profile, 5))
        assert set(result.assignment.tolist()) == set(range(5))

    def test_reported_e_matches_recomputation(self, iris):
        profile = build_profile(pairwise_euclidean(iris))
        result = improved_kmeans(iris, select_top_k(profile, 3))
        recomputed = criterion_E(iris, result.assignment, result.centroids)
        assert abs(recomputed - result.criterion_e) < 1e-9

    def test_centroids_are_cluster_means(self, iris):
        profile = build_profile(pairwise_euclidean(iris))
        result = improved_kmeans(iris, select_top_k(profile, 3))
        for c in range(3):
            members = iris.points[result.assignment == c]
            np.testing.assert_allclose(result.centroids[c], members.mean(axis=0))

    def test_mode_validated(self, iris):
        profile = build_profile(pairwise_euclidean(iris))
        with pytest.raises(ValueError, match="mode"):
            improved_kmeans(iris, select_top_k(profile, 3), mode="single-pass")

    def test_center_indices_validated(self, iris):
        with pytest.raises(ValueError, match="out of range"):
            improved_kmeans(iris, centers_at(0, 500))

    def test_config_echo(self, iris):
        profile = build_profile(pairwise_euclidean(iris))
        result = improved_kmeans(iris, select_top_k(profile, 3), kernel=KernelSpec(1.5))
        assert result.config["k"] == 3
        assert result.config["q"] == 1.5
        assert result.config["center_method"] == "gamma_top_k"
        assert result.seed is None

    def test_json_round_trip(self, iris):
        profile = build_profile(pairwise_euclidean(iris))
        result = improved_kmeans(iris, select_top_k(profile, 3))
        payload = json.loads(result.to_json())
        assert payload["criterion_e"] == result.criterion_e
        assert payload["iterations"] == result.iterations
        assert "elapsed_ms" in payload
        assert "elapsed_ms" not in json.loads(result.to_json(include_timing=False))
