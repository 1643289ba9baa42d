"""Exact dyadic primitives and the interpolation-node container.

Angles are stored in units of pi as a/2**b with odd a, so every node of the
closed-form disk construction is represented exactly and angle equality is
plain integer equality.  Dyadic rationals carry the exact recursion values;
Python integers make every operation lossless at any size.

All types here are immutable values and safe to share across threads.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

__all__ = [
    "BinaryExpansion",
    "binary_expand",
    "DyadicAngle",
    "DyadicRational",
    "LejaSection",
]

#: coordinate tolerance for node equality when exact angles are unavailable
COORD_TOL = 1e-12


@dataclass(frozen=True)
class BinaryExpansion:
    """The exponents p_0 < ... < p_s of the set bits of k."""

    k: int
    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError(f"k must be a positive integer, got {self.k}")
        exps = self.exponents
        if not exps or exps[0] < 0 or any(b <= a for a, b in zip(exps, exps[1:])):
            raise ValueError(f"exponents must be non-negative and strictly increasing: {exps}")
        if sum(1 << p for p in exps) != self.k:
            raise ValueError(f"exponents {exps} do not recombine to {self.k}")

    @property
    def valuation(self) -> int:
        """2-adic valuation of k (the lowest exponent)."""
        return self.exponents[0]

    @property
    def ones(self) -> int:
        """Number of binary ones of k, i.e. s + 1."""
        return len(self.exponents)


def binary_expand(k: int) -> BinaryExpansion:
    """Write k >= 1 as a sum of distinct powers of two, exponents ascending."""
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    return BinaryExpansion(k, tuple(p for p in range(k.bit_length()) if k >> p & 1))


@dataclass(frozen=True)
class DyadicAngle:
    """An exact angle pi * numerator / 2**log_denominator, reduced into [0, 2*pi).

    Instances are canonical (odd numerator, or the zero angle stored as 0/2**0),
    so ``==`` is exact angle equality modulo 2*pi.  Build unreduced input with
    :meth:`make`.
    """

    numerator: int
    log_denominator: int = 0

    def __post_init__(self) -> None:
        n, b = self.numerator, self.log_denominator
        if n < 0 or b < 0:
            raise ValueError(f"need non-negative fields, got {n}/2**{b}")
        if n == 0:
            if b != 0:
                raise ValueError("the zero angle must be stored as 0/2**0")
        elif n % 2 == 0 or n >= 1 << (b + 1):
            raise ValueError(f"{n}/2**{b} is not canonical")

    @classmethod
    def make(cls, numerator: int, log_denominator: int = 0) -> "DyadicAngle":
        """Canonicalize numerator / 2**log_denominator (units of pi, mod 2)."""
        if log_denominator < 0:
            numerator <<= -log_denominator
            log_denominator = 0
        numerator %= 1 << (log_denominator + 1)
        while numerator and numerator % 2 == 0:
            numerator //= 2
            log_denominator -= 1
        if numerator == 0:
            log_denominator = 0
        return cls(numerator, log_denominator)

    def __add__(self, other: "DyadicAngle") -> "DyadicAngle":
        b = max(self.log_denominator, other.log_denominator)
        num = (self.numerator << (b - self.log_denominator)) + (
            other.numerator << (b - other.log_denominator)
        )
        return DyadicAngle.make(num, b)

    def double(self) -> "DyadicAngle":
        """The angle of the squared point."""
        return DyadicAngle.make(2 * self.numerator, self.log_denominator)

    def antipode(self) -> "DyadicAngle":
        """The angle of the negated point (shift by pi)."""
        return DyadicAngle.make(self.numerator + (1 << self.log_denominator), self.log_denominator)

    @property
    def fraction_of_pi(self) -> float:
        return self.numerator / (1 << self.log_denominator)

    @property
    def radians(self) -> float:
        return math.pi * self.fraction_of_pi

    def to_point(self) -> complex:
        """exp(i*pi*angle) as a floating complex number on the unit circle."""
        return cmath.rect(1.0, self.radians)

    def __str__(self) -> str:
        return f"{self.numerator}/2^{self.log_denominator} pi"


def _strip_twos(numerator: int, log_denominator: int) -> tuple[int, int]:
    # reduce to lowest terms; integers keep log_denominator == 0
    if numerator == 0:
        return 0, 0
    while log_denominator > 0 and numerator % 2 == 0:
        numerator //= 2
        log_denominator -= 1
    return numerator, log_denominator


@dataclass(frozen=True)
class DyadicRational:
    """Exact numerator / 2**log_denominator with arbitrary-precision numerator.

    Kept in lowest terms (odd numerator whenever log_denominator > 0), so
    ``==`` is exact value equality.  Addition, multiplication and powers of
    two never round.
    """

    numerator: int
    log_denominator: int = 0

    def __post_init__(self) -> None:
        n, b = self.numerator, self.log_denominator
        if b < 0:
            raise ValueError(f"log_denominator must be non-negative, got {b}")
        if b > 0 and n % 2 == 0:
            raise ValueError(f"{n}/2**{b} is not in lowest terms")

    @classmethod
    def make(cls, numerator: int, log_denominator: int = 0) -> "DyadicRational":
        """Build numerator / 2**log_denominator; negative exponents scale up."""
        if log_denominator < 0:
            numerator <<= -log_denominator
            log_denominator = 0
        return cls(*_strip_twos(numerator, log_denominator))

    @staticmethod
    def _coerce(value) -> "DyadicRational":
        if isinstance(value, DyadicRational):
            return value
        if isinstance(value, int):
            return DyadicRational(value, 0)
        return NotImplemented

    def __add__(self, other) -> "DyadicRational":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        b = max(self.log_denominator, other.log_denominator)
        num = (self.numerator << (b - self.log_denominator)) + (
            other.numerator << (b - other.log_denominator)
        )
        return DyadicRational.make(num, b)

    __radd__ = __add__

    def __neg__(self) -> "DyadicRational":
        return DyadicRational(-self.numerator, self.log_denominator)

    def __sub__(self, other) -> "DyadicRational":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "DyadicRational":
        return (-self) + other

    def __mul__(self, other) -> "DyadicRational":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return DyadicRational.make(
            self.numerator * other.numerator,
            self.log_denominator + other.log_denominator,
        )

    __rmul__ = __mul__

    def scale_pow2(self, exponent: int) -> "DyadicRational":
        """Exact multiplication by 2**exponent (exponent of either sign)."""
        return DyadicRational.make(self.numerator, self.log_denominator - exponent)

    def _cmp_key(self, other: "DyadicRational") -> tuple[int, int]:
        b = max(self.log_denominator, other.log_denominator)
        return (
            self.numerator << (b - self.log_denominator),
            other.numerator << (b - other.log_denominator),
        )

    def __lt__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._cmp_key(other)
        return a < b

    def __le__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._cmp_key(other)
        return a <= b

    def __gt__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._cmp_key(other)
        return a > b

    def __ge__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._cmp_key(other)
        return a >= b

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = DyadicRational(other, 0)
        if not isinstance(other, DyadicRational):
            return NotImplemented
        return (
            self.numerator == other.numerator
            and self.log_denominator == other.log_denominator
        )

    def __hash__(self) -> int:
        return hash((self.numerator, self.log_denominator))

    def __float__(self) -> float:
        return self.numerator / (1 << self.log_denominator)

    def is_integer(self) -> bool:
        return self.log_denominator == 0

    def __str__(self) -> str:
        if self.log_denominator == 0:
            return str(self.numerator)
        return f"{self.numerator}/2^{self.log_denominator}"


@dataclass(frozen=True, eq=False)
class LejaSection:
    """An ordered tuple of interpolation nodes.

    Closed-form disk sections carry exact angles alongside floating
    coordinates; greedy sections carry coordinates only.  Points arrays are
    marked read-only, so sections are safe to share.
    """

    points: np.ndarray
    angles: Optional[tuple[DyadicAngle, ...]]
    origin_tag: str

    @classmethod
    def from_angles(cls, angles: Sequence[DyadicAngle], origin_tag: str) -> "LejaSection":
        angles = tuple(angles)
        if not angles:
            raise ValueError("a section needs at least one node")
        if len(set(angles)) != len(angles):
            raise ValueError("nodes are not pairwise distinct")
        pts = np.array([a.to_point() for a in angles], dtype=complex)
        pts.setflags(write=False)
        return cls(pts, angles, origin_tag)

    @classmethod
    def from_points(cls, points, origin_tag: str) -> "LejaSection":
        pts = np.array(points, dtype=complex)
        if pts.ndim != 1 or pts.size == 0:
            raise ValueError("points must be a non-empty 1-d sequence")
        if pts.size > 1:
            gap = np.abs(pts[:, None] - pts[None, :])
            np.fill_diagonal(gap, np.inf)
            if gap.min() <= COORD_TOL:
                raise ValueError("nodes are not pairwise distinct")
        pts.setflags(write=False)
        return cls(pts, None, origin_tag)

    def __len__(self) -> int:
        return len(self.points)

    @property
    def angle_backed(self) -> bool:
        return self.angles is not None

    def same_nodes(self, other: "LejaSection") -> bool:
        """Exact comparison on angles when both sides have them, else
        coordinate comparison within 1e-12."""
        if len(self) != len(other):
            return False
        if self.angle_backed and other.angle_backed:
            return self.angles == other.angles
        return bool(np.all(np.abs(self.points - other.points) <= COORD_TOL))

    def __repr__(self) -> str:
        kind = "angles" if self.angle_backed else "points"
        return f"LejaSection(len={len(self)}, {kind}, origin={self.origin_tag!r})"
