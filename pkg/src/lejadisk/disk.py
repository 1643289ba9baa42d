"""Closed-form construction of disk Leja sections and their pair relations.

The sequence starts at 1; for k >= 1 the k-th node is the unit point whose
phase (in units of pi) is the sum of 2**(-p) over the set-bit exponents p of
k.  Prefixes of length 2**n are exactly the 2**n-th roots of unity, and the
whole sequence can equivalently be grown by rotate-and-concatenate doubling.
All constructions below stay in exact dyadic-angle arithmetic; floating
coordinates appear only on the section container's evaluation side.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import DyadicAngle, LejaSection, binary_expand

__all__ = [
    "explicit_leja_point",
    "explicit_section",
    "doubling_section",
    "SymmetryReport",
    "check_symmetry_relations",
]


def explicit_leja_point(k: int) -> DyadicAngle:
    """Exact angle of the k-th node of the closed-form sequence."""
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    if k == 0:
        return DyadicAngle(0, 0)
    exps = binary_expand(k).exponents
    top = exps[-1]
    return DyadicAngle.make(sum(1 << (top - p) for p in exps), top)


def explicit_section(k: int) -> LejaSection:
    """The first k nodes of the closed-form sequence, angle-backed."""
    if k < 1:
        raise ValueError(f"section length must be positive, got {k}")
    return LejaSection.from_angles(
        tuple(explicit_leja_point(i) for i in range(k)), origin_tag="explicit"
    )


def doubling_section(n: int) -> LejaSection:
    """Grow a section of length 2**(n+1) by repeated rotate-and-concatenate.

    Starting from (1), each round m appends a copy of the current section
    rotated by the angle 1/2**m (units of pi).  The result coincides node by
    node with :func:`explicit_section` of the same length.
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    angles = [DyadicAngle(0, 0)]
    for m in range(n + 1):
        rot = DyadicAngle.make(1, m)
        angles.extend(a + rot for a in angles[:])
    return LejaSection.from_angles(tuple(angles), origin_tag="doubling")


@dataclass(frozen=True)
class SymmetryReport:
    """Outcome of the exact pair relations on an even-length section.

    For each j below half the length the relations are: the odd node is the
    antipode of the even node, and both of their squares equal node j.  A
    ``None`` failure index means the relation held everywhere.
    """

    pairs: int
    negation_failure: Optional[int]
    even_square_failure: Optional[int]
    odd_square_failure: Optional[int]

    @property
    def ok(self) -> bool:
        return (
            self.negation_failure is None
            and self.even_square_failure is None
            and self.odd_square_failure is None
        )

    def __bool__(self) -> bool:
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return f"all pair relations hold on {self.pairs} pairs"
        parts = []
        if self.negation_failure is not None:
            parts.append(f"e[2j+1] != -e[2j] first fails at j={self.negation_failure}")
        if self.even_square_failure is not None:
            parts.append(f"e[2j]^2 != e[j] first fails at j={self.even_square_failure}")
        if self.odd_square_failure is not None:
            parts.append(f"e[2j+1]^2 != e[j] first fails at j={self.odd_square_failure}")
        return "; ".join(parts)


def check_symmetry_relations(section: LejaSection) -> SymmetryReport:
    """Verify the antipodal-pair and square-retrace relations exactly.

    Requires an angle-backed section of even length; all comparisons are
    integer comparisons of canonical dyadic angles.
    """
    if not section.angle_backed:
        raise ValueError("symmetry relations need an angle-backed section")
    ang = section.angles
    if len(ang) % 2:
        raise ValueError(f"section length must be even, got {len(ang)}")
    m = len(ang) // 2
    neg = even_sq = odd_sq = None
    for j in range(m):
        if neg is None and ang[2 * j + 1] != ang[2 * j].antipode():
            neg = j
        if even_sq is None and ang[2 * j].double() != ang[j]:
            even_sq = j
        if odd_sq is None and ang[2 * j + 1].double() != ang[j]:
            odd_sq = j
        if neg is not None and even_sq is not None and odd_sq is not None:
            break
    return SymmetryReport(m, neg, even_sq, odd_sq)
