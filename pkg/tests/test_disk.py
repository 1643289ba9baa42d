import numpy as np
import pytest

from lejadisk import (
    DyadicAngle,
    LejaSection,
    check_symmetry_relations,
    doubling_section,
    explicit_leja_point,
    explicit_section,
)


class TestExplicitPoints:
    def test_start_and_first_steps(self):
        assert explicit_leja_point(0) == DyadicAngle(0, 0)
        assert explicit_leja_point(1) == DyadicAngle(1, 0)  # the point -1
        assert explicit_leja_point(5) == DyadicAngle(5, 2)  # exp(5i*pi/4)

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            explicit_leja_point(-1)

    def test_injective_up_to_2_pow_20(self):
        seen = set()
        for k in range(1 << 20):
            a = explicit_leja_point(k)
            seen.add((a.numerator, a.log_denominator))
        assert len(seen) == 1 << 20


class TestExplicitSection:
    def test_small_sections(self):
        assert explicit_section(1).angles == (DyadicAngle(0, 0),)
        assert explicit_section(2).angles == (DyadicAngle(0, 0), DyadicAngle(1, 0))
        # hand-evaluated: phases 0, 1, 1/2, 3/2 give 1, -1, i, -i in order
        sec = explicit_section(4)
        assert np.allclose(sec.points, [1, -1, 1j, -1j], atol=1e-15)

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            explicit_section(0)

    @pytest.mark.parametrize("n", range(1, 13))
    def test_power_of_two_sections_are_roots_of_unity(self, n):
        sec = explicit_section(1 << n)
        # the 2^n-th roots of unity have angles pi * j / 2^(n-1)
        want = {DyadicAngle.make(j, n - 1) for j in range(1 << n)}
        assert set(sec.angles) == want


class TestDoubling:
    def test_first_rounds(self):
        assert doubling_section(0).angles == (DyadicAngle(0, 0), DyadicAngle(1, 0))
        sec = doubling_section(1)
        assert np.allclose(sec.points, [1, -1, 1j, -1j], atol=1e-15)

    @pytest.mark.parametrize("n", range(0, 13))
    def test_matches_explicit_construction(self, n):
        assert doubling_section(n).angles == explicit_section(1 << (n + 1)).angles

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            doubling_section(-1)


class TestSymmetryRelations:
    @pytest.mark.parametrize("k", [2, 8, 64, 256])
    def test_explicit_sections_pass(self, k):
        report = check_symmetry_relations(explicit_section(k))
        assert report.ok and bool(report)
        assert report.pairs == k // 2

    def test_counterexample(self):
        bad = LejaSection.from_angles([DyadicAngle(0, 0), DyadicAngle(1, 1)], "test")
        report = check_symmetry_relations(bad)  # nodes 1, i
        assert not report.ok
        assert report.negation_failure == 0
        assert "j=0" in report.describe()

    def test_requires_even_angle_backed(self):
        with pytest.raises(ValueError):
            check_symmetry_relations(explicit_section(3))
        with pytest.raises(ValueError):
            check_symmetry_relations(LejaSection.from_points([1.0, -1.0], "t"))
