"""Exact recursion for the squared-constant majorant and its defect.

The majorant sequence starts at 1 and satisfies, for N >= 1, value(2N) =
value(N) and value(2N+1) = value(N+1)/2 + 2*value(N) + 1/2.  The defect of k
is 2**(-p0) * k minus the majorant, where p0 is the 2-adic valuation of k;
it is non-negative and vanishes exactly on the indices 2**p * (2**n - 1).
Everything in this module is exact dyadic arithmetic; no floats anywhere.
"""

from __future__ import annotations

from typing import Dict, Iterable, List

from .core import BinaryExpansion, DyadicRational, binary_expand

__all__ = [
    "MajorantSequence",
    "majorant_value",
    "defect_value",
    "closed_form_check",
    "defect_reduction_check",
    "defect_expansion_sum",
    "defect_zero_indices",
    "predicted_zero_defect_indices",
]

_HALF = DyadicRational(1, 1)
_ONE = DyadicRational(1, 0)


class MajorantSequence:
    """Memoized evaluator of the exact recursion.

    The memo table only ever grows and holds immutable values, so concurrent
    readers are safe; populate it from a single writer.
    """

    def __init__(self) -> None:
        self._memo: Dict[int, DyadicRational] = {1: _ONE}

    def value(self, k: int) -> DyadicRational:
        if k < 1:
            raise ValueError(f"index must be positive, got {k}")
        memo = self._memo
        got = memo.get(k)
        if got is not None:
            return got
        # iterative descent: collect unresolved indices, then fold back up
        stack = [k]
        while stack:
            i = stack[-1]
            if i in memo:
                stack.pop()
                continue
            if i % 2 == 0:
                half = memo.get(i // 2)
                if half is None:
                    stack.append(i // 2)
                else:
                    memo[i] = half
                    stack.pop()
            else:
                n = i // 2
                lo, hi = memo.get(n), memo.get(n + 1)
                if lo is None:
                    stack.append(n)
                elif hi is None:
                    stack.append(n + 1)
                else:
                    memo[i] = _HALF * hi + 2 * lo + _HALF
                    stack.pop()
        return memo[k]


_shared = MajorantSequence()


def majorant_value(k: int) -> DyadicRational:
    """Exact majorant value at index k >= 1 (shared memo table)."""
    return _shared.value(k)


def defect_value(k: int) -> DyadicRational:
    """Exact defect 2**(-p0) * k - majorant(k), p0 the 2-adic valuation."""
    p0 = binary_expand(k).valuation
    return DyadicRational.make(k, p0) - majorant_value(k)


def closed_form_check(n: int, m: int) -> bool:
    """Exactly verify the two power-of-two shift identities.

    For n >= 0 and m >= 1: majorant(2**n * m) equals majorant(m), and
    majorant(2**n * m + 1) equals
    2**(-n)*majorant(m+1) + 4*(1 - 2**(-n))*majorant(m) + 1 - 2**(-n).
    """
    if n < 0 or m < 1:
        raise ValueError(f"need n >= 0 and m >= 1, got n={n}, m={m}")
    um = majorant_value(m)
    if majorant_value((1 << n) * m) != um:
        return False
    scale = DyadicRational(1, n)  # 2**(-n)
    rhs = scale * majorant_value(m + 1) + 4 * (_ONE - scale) * um + _ONE - scale
    return majorant_value((1 << n) * m + 1) == rhs


def defect_reduction_check(expansion: BinaryExpansion) -> bool:
    """Exactly verify that the defect only depends on the shifted odd part."""
    return defect_value(expansion.k) == defect_value(expansion.k >> expansion.valuation)


def defect_expansion_sum(expansion: BinaryExpansion) -> DyadicRational:
    """Evaluate the defect directly from the gaps of the binary expansion.

    For exponents p_0 < ... < p_s with s >= 1 the defect equals

        sum_{j=1..s} 2**(j - p_j + p_0) * (2**(p_j - p_{j-1}) - 2) *
            [ (3*2**(j-1) - 1) * defect(2**p_j + ... + 2**p_s)
              + (2**(j-2) * (2**(p_j - p_{j-1}) - 4) + 1)
                * (1 + 2**(p_{j+1} - p_j) + ... + 2**(p_s - p_j)) ]

    with the inner defects taken from the recursion, which keeps this
    evaluation independent of the identity it is checked against.  Gaps of
    width one contribute exactly zero.
    """
    exps = expansion.exponents
    s = len(exps) - 1
    if s < 1:
        raise ValueError("the expansion sum needs at least two binary ones")
    total = DyadicRational(0, 0)
    suffix = expansion.k  # 2**p_j + ... + 2**p_s, shrinking as j advances
    for j in range(1, s + 1):
        suffix -= 1 << exps[j - 1]
        gap = exps[j] - exps[j - 1]
        gap_factor = (1 << gap) - 2
        if gap_factor == 0:
            continue
        tail = suffix >> exps[j]  # 1 + 2**(p_{j+1}-p_j) + ... + 2**(p_s-p_j)
        inner = (3 * (1 << (j - 1)) - 1) * defect_value(suffix) + (
            DyadicRational.make(gap_factor - 2, 2 - j) + _ONE
        ) * tail
        total = total + (DyadicRational.make(gap_factor, exps[j] - exps[0] - j)) * inner
    return total


def defect_zero_indices(limit: int) -> List[int]:
    """Scan 1..limit with the exact recursion; return all k with zero defect."""
    if limit < 1:
        raise ValueError(f"limit must be positive, got {limit}")
    return [k for k in range(1, limit + 1) if defect_value(k).numerator == 0]


def predicted_zero_defect_indices(limit: int) -> List[int]:
    """Enumerate {2**p * (2**n - 1) : p >= 0, n >= 1} up to limit.

    Independent of the recursion; pairs with :func:`defect_zero_indices` as a
    two-sided check of the zero-defect characterization.
    """
    if limit < 1:
        raise ValueError(f"limit must be positive, got {limit}")
    out = set()
    n = 1
    while (1 << n) - 1 <= limit:
        value = (1 << n) - 1
        while value <= limit:
            out.add(value)
            value <<= 1
        n += 1
    return sorted(out)
