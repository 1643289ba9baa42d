import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lejadisk import (
    BinaryExpansion,
    DyadicAngle,
    DyadicRational,
    LejaSection,
    binary_expand,
)


class TestBinaryExpansion:
    def test_examples(self):
        assert binary_expand(12).exponents == (2, 3)
        assert binary_expand(5).exponents == (0, 2)
        for n in range(1, 12):
            assert binary_expand(2**n - 1).exponents == tuple(range(n))

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            binary_expand(0)
        with pytest.raises(ValueError):
            binary_expand(-3)

    @given(st.integers(min_value=1, max_value=1 << 20))
    def test_round_trip(self, k):
        exp = binary_expand(k)
        assert sum(1 << p for p in exp.exponents) == k
        assert exp.exponents == tuple(sorted(exp.exponents))

    def test_round_trip_exhaustive_small(self):
        for k in range(1, 1 << 12):
            assert sum(1 << p for p in binary_expand(k).exponents) == k

    @given(st.integers(min_value=1, max_value=1 << 20))
    def test_valuation(self, k):
        exp = binary_expand(k)
        assert k % (1 << exp.valuation) == 0
        assert (k >> exp.valuation) % 2 == 1
        assert exp.ones == bin(k).count("1")

    def test_invalid_construction(self):
        with pytest.raises(ValueError):
            BinaryExpansion(3, (0, 0))
        with pytest.raises(ValueError):
            BinaryExpansion(5, (0, 1))


class TestDyadicAngle:
    def test_point_examples(self):
        assert DyadicAngle(0, 0).to_point() == 1.0
        assert abs(DyadicAngle.make(1, 0).to_point() - (-1.0)) < 1e-15
        assert abs(DyadicAngle.make(3, 1).to_point() - (-1j)) < 1e-15

    @given(st.integers(min_value=0, max_value=1 << 24), st.integers(min_value=0, max_value=20))
    def test_unit_modulus(self, num, logden):
        assert abs(abs(DyadicAngle.make(num, logden).to_point()) - 1.0) < 1e-15

    @given(st.integers(min_value=0, max_value=1 << 24), st.integers(min_value=0, max_value=20))
    def test_canonicalization_is_idempotent_and_mod_two(self, num, logden):
        a = DyadicAngle.make(num, logden)
        assert DyadicAngle.make(a.numerator, a.log_denominator) == a
        # adding a full turn (2 in units of pi) changes nothing
        assert DyadicAngle.make(num + (2 << logden), logden) == a
        # canonical value agrees with exact rational reduction mod 2
        assert Fraction(a.numerator, 1 << a.log_denominator) == Fraction(num, 1 << logden) % 2

    @given(
        st.integers(min_value=0, max_value=1 << 16),
        st.integers(min_value=0, max_value=14),
        st.integers(min_value=0, max_value=1 << 16),
        st.integers(min_value=0, max_value=14),
    )
    def test_add_double_antipode_match_fractions(self, n1, b1, n2, b2):
        a1, a2 = DyadicAngle.make(n1, b1), DyadicAngle.make(n2, b2)
        f1 = Fraction(a1.numerator, 1 << a1.log_denominator)
        f2 = Fraction(a2.numerator, 1 << a2.log_denominator)
        got = a1 + a2
        assert Fraction(got.numerator, 1 << got.log_denominator) == (f1 + f2) % 2
        dbl = a1.double()
        assert Fraction(dbl.numerator, 1 << dbl.log_denominator) == (2 * f1) % 2
        anti = a1.antipode()
        assert Fraction(anti.numerator, 1 << anti.log_denominator) == (f1 + 1) % 2

    def test_rejects_non_canonical(self):
        with pytest.raises(ValueError):
            DyadicAngle(2, 1)
        with pytest.raises(ValueError):
            DyadicAngle(0, 3)
        with pytest.raises(ValueError):
            DyadicAngle(9, 2)  # value >= 2


def _to_fraction(r: DyadicRational) -> Fraction:
    return Fraction(r.numerator, 1 << r.log_denominator)


class TestDyadicRational:
    def test_examples(self):
        half = DyadicRational(1, 1)
        assert half + half == DyadicRational(1, 0)
        assert DyadicRational(3, 2) * half == DyadicRational(3, 3)
        assert DyadicRational(5, 0).scale_pow2(-3) == DyadicRational(5, 3)

    def test_integer_interop(self):
        assert 2 * DyadicRational(3, 1) == 3
        assert DyadicRational(1, 1) + 1 == DyadicRational(3, 1)
        assert 1 - DyadicRational(1, 2) == DyadicRational(3, 2)

    def test_agrees_with_fractions_bulk(self):
        # 10^4 random operand pairs against exact rational arithmetic
        rng = np.random.default_rng(1234)
        for _ in range(10_000):
            n1, n2 = int(rng.integers(-(1 << 30), 1 << 30)), int(rng.integers(-(1 << 30), 1 << 30))
            b1, b2 = int(rng.integers(0, 24)), int(rng.integers(0, 24))
            x, y = DyadicRational.make(n1, b1), DyadicRational.make(n2, b2)
            fx, fy = Fraction(n1, 1 << b1), Fraction(n2, 1 << b2)
            assert _to_fraction(x + y) == fx + fy
            assert _to_fraction(x * y) == fx * fy
            assert _to_fraction(x - y) == fx - fy
            assert (x < y) == (fx < fy)

    @given(
        st.integers(min_value=-(1 << 64), max_value=1 << 64),
        st.integers(min_value=0, max_value=40),
        st.integers(min_value=-20, max_value=20),
    )
    def test_scale_pow2_exact(self, num, logden, e):
        x = DyadicRational.make(num, logden)
        assert _to_fraction(x.scale_pow2(e)) == _to_fraction(x) * Fraction(2) ** e

    def test_canonical_form(self):
        assert DyadicRational.make(4, 2) == DyadicRational(1, 0)
        assert DyadicRational.make(0, 7) == DyadicRational(0, 0)
        assert DyadicRational.make(6, 1) == DyadicRational(3, 0)
        with pytest.raises(ValueError):
            DyadicRational(2, 1)

    def test_float_and_str(self):
        assert float(DyadicRational(3, 1)) == 1.5
        assert str(DyadicRational(3, 1)) == "3/2^1"
        assert str(DyadicRational(-7, 0)) == "-7"


class TestLejaSection:
    def test_from_angles_unit_modulus(self):
        angles = [DyadicAngle.make(j, 3) for j in range(16)]
        sec = LejaSection.from_angles(angles, "test")
        assert np.all(np.abs(np.abs(sec.points) - 1.0) < 1e-14)
        assert len(sec) == 16 and sec.angle_backed

    def test_rejects_duplicates(self):
        with pytest.raises(ValueError):
            LejaSection.from_angles([DyadicAngle(0, 0), DyadicAngle(0, 0)], "test")
        with pytest.raises(ValueError):
            LejaSection.from_points([1.0, 1.0 + 1e-14], "test")

    def test_same_nodes(self):
        a = LejaSection.from_angles([DyadicAngle(0, 0), DyadicAngle(1, 0)], "t")
        b = LejaSection.from_angles([DyadicAngle(0, 0), DyadicAngle(1, 0)], "t")
        c = LejaSection.from_points([1.0, -1.0 + 1e-13], "t")
        assert a.same_nodes(b)
        assert a.same_nodes(c)  # falls back to coordinate tolerance
        assert not a.same_nodes(LejaSection.from_points([1.0, 1j], "t"))

    def test_points_read_only(self):
        sec = LejaSection.from_points([1.0, -1.0], "t")
        with pytest.raises(ValueError):
            sec.points[0] = 0.0
