import numpy as np
import pytest

from lejadisk import (
    DiscretizedCompact,
    LejaSection,
    circle_grid,
    explicit_section,
    find_rotation_match,
    greedy_extend,
    greedy_section,
    transfinite_diameter_diagnostic,
)


def brute_force_pick(nodes: np.ndarray, candidates: np.ndarray) -> int:
    """Direct-product argmax over the candidate list, skipping taken points."""
    best_idx, best_val = -1, -1.0
    for i, z in enumerate(candidates):
        gaps = np.abs(z - nodes)
        if gaps.min() < 1e-14:
            continue
        val = float(np.prod(gaps))
        if val > best_val:
            best_idx, best_val = i, val
    return best_idx


class TestGreedyExtend:
    def test_second_point_is_opposite(self):
        grid = circle_grid(4096)
        sec = LejaSection.from_points([1.0 + 0j], "greedy")
        out = greedy_extend(sec, grid)
        assert abs(out.points[-1] - (-1.0)) < 2 * np.pi / 4096

    def test_third_point_near_imaginary_axis(self):
        grid = circle_grid(4096)
        sec = greedy_section(2, grid, 1.0 + 0j)
        out = greedy_extend(sec, grid)
        assert abs(abs(out.points[-1].imag) - 1.0) < 2 * np.pi / 4096

    def test_exhausted_candidates_raise(self):
        cand = DiscretizedCompact(np.array([1.0 + 0j, -1.0 + 0j]), "pair")
        sec = LejaSection.from_points([1.0 + 0j, -1.0 + 0j], "greedy")
        with pytest.raises(ValueError):
            greedy_extend(sec, cand)

    def test_matches_direct_product_selection(self):
        # log-domain and direct-product selection agree while products
        # stay far from overflow
        rng = np.random.default_rng(7)
        cand = np.exp(2j * np.pi * rng.random(400))
        compact = DiscretizedCompact(cand, "random circle")
        sec = LejaSection.from_points([cand[0]], "greedy")
        for _ in range(63):
            want = brute_force_pick(sec.points, cand)
            sec = greedy_extend(sec, compact)
            assert abs(sec.points[-1] - cand[want]) < 1e-15


class TestGreedySection:
    def test_two_points(self):
        assert np.allclose(
            greedy_section(2, circle_grid(4096), 1.0 + 0j).points, [1.0, -1.0], atol=1e-12
        )

    def test_single_point(self):
        sec = greedy_section(1, circle_grid(64), 1.0 + 0j)
        assert len(sec) == 1 and sec.points[0] == 1.0

    def test_sixteen_points_hit_roots_of_unity(self):
        sec = greedy_section(16, circle_grid(8192), 1.0 + 0j)
        roots = np.exp(2j * np.pi * np.arange(16) / 16)
        gap = np.abs(np.sort(np.angle(sec.points) % (2 * np.pi)) - np.sort(np.angle(roots) % (2 * np.pi)))
        assert gap.max() <= 2 * np.pi / 8192

    def test_seed_must_belong(self):
        with pytest.raises(ValueError):
            greedy_section(3, circle_grid(64), 0.5 + 0.5j)

    @pytest.mark.parametrize("size", [2, 4, 8, 16])
    def test_rotation_equivalence_with_closed_form(self, size):
        sec = greedy_section(size, circle_grid(8192), 1.0 + 0j)
        rho = find_rotation_match(
            sec.points, explicit_section(size).points, angle_tol=2 * np.pi / 8192
        )
        assert rho is not None
        assert abs(abs(rho) - 1.0) < 1e-12

    def test_objective_monotone_under_candidate_shrink(self):
        # the maximized product can only drop when the candidate set shrinks
        rng = np.random.default_rng(11)
        cand = np.exp(2j * np.pi * rng.random(600))
        nodes = explicit_section(9).points

        def best_log_product(points):
            scores = [
                float(np.sum(np.log(np.abs(z - nodes))))
                for z in points
                if np.abs(z - nodes).min() > 1e-14
            ]
            return max(scores)

        full = best_log_product(cand)
        for take in (400, 200, 50):
            assert best_log_product(cand[:take]) <= full + 1e-12


class TestTransfiniteDiagnostic:
    def test_pair_value(self):
        sec = LejaSection.from_points([1.0, -1.0], "t")
        assert transfinite_diameter_diagnostic(sec) == [(1, 2.0)]

    def test_matches_direct_products(self):
        sec = explicit_section(200)
        diag = dict(transfinite_diameter_diagnostic(sec))
        for k in (1, 7, 50, 199):
            direct = float(np.prod(np.abs(sec.points[k] - sec.points[:k])) ** (1.0 / k))
            assert abs(diag[k] - direct) < 1e-10

    def test_drifts_to_disk_capacity(self):
        diag = transfinite_diameter_diagnostic(explicit_section(256))
        assert abs(diag[-1][1] - 1.0) < 0.05

    def test_bounded_by_four(self):
        diag = transfinite_diameter_diagnostic(explicit_section(1024))
        assert max(v for _, v in diag) <= 4.0

    def test_needs_two_points(self):
        with pytest.raises(ValueError):
            transfinite_diameter_diagnostic(LejaSection.from_points([1.0], "t"))


class TestDiscretizedCompact:
    def test_needs_two_distinct_points(self):
        with pytest.raises(ValueError):
            DiscretizedCompact(np.array([1.0 + 0j]), "one")
        with pytest.raises(ValueError):
            DiscretizedCompact(np.array([1.0 + 0j, 1.0 + 0j]), "dup")

    def test_circle_grid_on_unit_circle(self):
        grid = circle_grid(1024)
        assert np.abs(np.abs(grid.points) - 1.0).max() < 1e-14
        assert len(grid) == 1024
