import numpy as np
import pytest

from dpkmeans import (
    DataError,
    Dataset,
    KernelSpec,
    PairwiseDistances,
    centroid_power_distance,
    cpd_kernel,
    kernel_cluster_distance,
    pairwise_euclidean,
    verify_cpd,
)

from reference import direct_cluster_distance, direct_quadratic_form


class TestPairwiseEuclidean:
    def test_three_four_five(self):
        dist = pairwise_euclidean(Dataset(np.array([[0.0, 0.0], [3.0, 4.0]])))
        assert dist.d[0, 1] == 5.0

    def test_single_point(self):
        dist = pairwise_euclidean(Dataset(np.array([[7.0]])))
        assert dist.n == 1 and dist.d[0, 0] == 0.0

    def test_one_dimensional(self):
        dist = pairwise_euclidean(Dataset(np.array([[0.0], [1.0], [3.0]])))
        np.testing.assert_allclose(dist.d, [[0, 1, 3], [1, 0, 2], [3, 2, 0]])

    def test_triangle_inequality(self):
        rng = np.random.default_rng(5)
        dist = pairwise_euclidean(Dataset(rng.normal(size=(30, 3))))
        for _ in range(200):
            i, j, k = rng.integers(0, 30, size=3)
            assert dist.d[i, j] <= dist.d[i, k] + dist.d[k, j] + 1e-12

    def test_condensed_length(self):
        dist = pairwise_euclidean(Dataset(np.arange(5.0).reshape(-1, 1)))
        assert dist.condensed().shape == (10,)


class TestPairwiseDistancesValidation:
    def test_rejects_asymmetric(self):
        with pytest.raises(DataError, match="symmetric"):
            PairwiseDistances(np.array([[0.0, 1.0], [2.0, 0.0]]))

    def test_rejects_negative(self):
        with pytest.raises(DataError, match="negative"):
            PairwiseDistances(np.array([[0.0, -1.0], [-1.0, 0.0]]))

    def test_rejects_nonzero_diagonal(self):
        with pytest.raises(DataError, match="diagonal"):
            PairwiseDistances(np.array([[1.0, 2.0], [2.0, 0.0]]))


class TestKernelSpec:
    @pytest.mark.parametrize("q", [0.0, -0.5, 2.0001, 3.0])
    def test_invalid_exponents(self, q):
        with pytest.raises(ValueError, match=r"\(0, 2\]"):
            KernelSpec(q)

    @pytest.mark.parametrize("q", [0.5, 1.0, 1.5, 2.0])
    def test_valid_exponents(self, q):
        assert KernelSpec(q).q == q


class TestCpdKernel:
    def test_zero_distance(self):
        assert cpd_kernel([1.0, 2.0], [1.0, 2.0], KernelSpec(1.5)) == 0.0

    def test_q1(self):
        assert cpd_kernel([0.0, 0.0], [3.0, 4.0], KernelSpec(1.0)) == -5.0

    def test_q2(self):
        assert cpd_kernel([0.0, 0.0], [3.0, 4.0], KernelSpec(2.0)) == pytest.approx(-25.0)

    def test_symmetry(self):
        rng = np.random.default_rng(1)
        for _ in range(20):
            x, y = rng.normal(size=(2, 4))
            spec = KernelSpec(rng.uniform(0.1, 2.0))
            assert cpd_kernel(x, y, spec) == cpd_kernel(y, x, spec)

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError, match="dimension"):
            cpd_kernel([1.0], [1.0, 2.0], KernelSpec())


class TestVerifyCpd:
    def test_identical_points_vanish(self):
        assert verify_cpd([[1.0], [1.0]], [1.0, -1.0], KernelSpec(1.0)) == 0.0

    def test_hand_expanded_pair(self):
        # c1^2 k11 + 2 c1 c2 k12 + c2^2 k22 = 2 * (1)(-1)(-1) = 2
        assert verify_cpd([[0.0], [1.0]], [1.0, -1.0], KernelSpec(2.0)) == pytest.approx(2.0)

    def test_coefficient_sum_enforced(self):
        with pytest.raises(ValueError, match="sum"):
            verify_cpd([[0.0], [1.0]], [1.0, -0.5], KernelSpec())

    def test_matches_direct_double_sum(self):
        rng = np.random.default_rng(9)
        for _ in range(25):
            pts = rng.uniform(0, 1, size=(8, 3))
            c = rng.normal(size=8)
            c -= c.mean()
            got = verify_cpd(pts, c, KernelSpec(1.5))
            want = direct_quadratic_form(pts.tolist(), c.tolist(), 1.5)
            assert got == pytest.approx(want, abs=1e-9)

    @pytest.mark.parametrize("q", [0.5, 1.0, 1.5, 2.0])
    def test_nonnegative_on_zero_sum(self, q):
        rng = np.random.default_rng(int(q * 10))
        spec = KernelSpec(q)
        for _ in range(200):
            pts = rng.uniform(0, 1, size=(20, 4))
            c = rng.normal(size=20)
            c -= c.mean()
            assert verify_cpd(pts, c, spec) >= -1e-9


class TestKernelClusterDistance:
    def test_two_member_q2(self):
        got = kernel_cluster_distance([1.0, 1.0], [[0.0, 0.0], [2.0, 0.0]], KernelSpec(2.0))
        assert got == pytest.approx(2.0)

    def test_singleton_equal_point(self):
        assert kernel_cluster_distance([3.0], [[3.0]], KernelSpec(1.5)) == 0.0

    def test_two_member_q1(self):
        got = kernel_cluster_distance([1.0], [[0.0], [2.0]], KernelSpec(1.0))
        assert got == pytest.approx(1.0)

    def test_empty_members(self):
        with pytest.raises(ValueError, match="no members"):
            kernel_cluster_distance([1.0], np.empty((0, 1)), KernelSpec())

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError, match="dimension"):
            kernel_cluster_distance([1.0], [[1.0, 2.0]], KernelSpec())

    def test_matches_direct_formula(self):
        rng = np.random.default_rng(17)
        for _ in range(25):
            members = rng.normal(size=(int(rng.integers(1, 7)), 3))
            x = rng.normal(size=3)
            q = float(rng.uniform(0.1, 2.0))
            got = kernel_cluster_distance(x, members, KernelSpec(q))
            want = direct_cluster_distance(x.tolist(), members.tolist(), q)
            assert got == pytest.approx(want, abs=1e-9)

    def test_q2_equals_twice_squared_distance_to_mean(self):
        rng = np.random.default_rng(2)
        spec = KernelSpec(2.0)
        for _ in range(100):
            members = rng.normal(size=(int(rng.integers(1, 10)), 4))
            x = rng.normal(size=4)
            got = kernel_cluster_distance(x, members, spec)
            want = 2.0 * float(np.sum((x - members.mean(axis=0)) ** 2))
            assert got == pytest.approx(want, abs=1e-9)

    def test_translation_invariance(self):
        rng = np.random.default_rng(4)
        for _ in range(50):
            members = rng.normal(size=(5, 3))
            x = rng.normal(size=3)
            shift = rng.normal(size=3) * 10
            spec = KernelSpec(float(rng.uniform(0.1, 2.0)))
            a = kernel_cluster_distance(x, members, spec)
            b = kernel_cluster_distance(x + shift, members + shift, spec)
            assert a == pytest.approx(b, abs=1e-9)


class TestCentroidPowerDistance:
    def test_literal_power(self):
        assert centroid_power_distance([0.0, 0.0], [3.0, 4.0], KernelSpec(1.0)) == 5.0
        assert centroid_power_distance([0.0, 0.0], [3.0, 4.0], KernelSpec(2.0)) == pytest.approx(25.0)

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError, match="dimension"):
            centroid_power_distance([1.0], [1.0, 2.0], KernelSpec())
