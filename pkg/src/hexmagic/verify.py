"""Magicness verification, normality checks, and the normal-existence scan."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .grid import Hexagon, cell_count, line_sums


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of verifying one hexagon.

    ``magic_sum`` is present iff all line sums agree; ``is_normal`` means
    magic with entries exactly 1..3n^2-3n+1, each used once.
    """

    order: int
    is_magic: bool
    magic_sum: Optional[Fraction]
    line_sums: tuple[Fraction, ...]
    entry_min: Fraction
    entry_max: Fraction
    entries_distinct: bool
    is_normal: bool


def verify(h: Hexagon) -> VerifyReport:
    """Compute all line sums and classify the hexagon.

    Report-valued on purpose: near-misses keep their full line-sum list so a
    bad cell can be tracked down instead of being swallowed by an exception.
    """
    sums = line_sums(h)
    values = h.values()
    is_magic = len(set(sums)) == 1
    magic_sum = sums[0] if is_magic else None
    distinct = len(set(values)) == len(values)
    normal = is_magic and distinct and _is_consecutive_from_one(values)
    return VerifyReport(
        order=h.order,
        is_magic=is_magic,
        magic_sum=magic_sum,
        line_sums=sums,
        entry_min=min(values),
        entry_max=max(values),
        entries_distinct=distinct,
        is_normal=normal,
    )


def _is_consecutive_from_one(values: tuple[Fraction, ...]) -> bool:
    if any(v.denominator != 1 for v in values):
        return False
    return sorted(int(v) for v in values) == list(range(1, len(values) + 1))


def entry_multiset(h: Hexagon) -> tuple[Fraction, ...]:
    """Cell values sorted with multiplicity (for comparing printed entry lists)."""
    return tuple(sorted(h.values()))


def normal_magic_sum(n: int) -> Optional[int]:
    """The only possible magic sum of a normal order-n hexagon, if integral.

    The entries 1..T with T = 3n^2-3n+1 total S = T(T+1)/2, spread over the
    2n-1 rows, so a normal hexagon forces M = S/(2n-1); returns None when
    2n-1 does not divide S (no normal hexagon can exist for that order).
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"order must be a positive integer, got {n!r}")
    total_cells = cell_count(n)
    total = total_cells * (total_cells + 1) // 2
    rows = 2 * n - 1
    if total % rows:
        return None
    return total // rows


def normal_existence_scan(n_max: int) -> list[int]:
    """All orders up to n_max whose normal magic sum is an integer.

    Returns [1, 3] for every n_max >= 3.  Why only those: with k = 2n-1,
    one has 2n-1 odd, T = 3n^2-3n+1 satisfies 4T = 3k^2+1, so 4T = 1 (mod k)
    and 32*S = 16*T*(T+1) = (4T)(4T+4) = 1*5 = 5 (mod k).  k | S would force
    k | 32S = 5, i.e. k in {1, 5}, so n in {1, 3}.  The scan below is the
    direct divisibility check, independent of that argument.
    """
    if not isinstance(n_max, int) or n_max < 1:
        raise ValueError(f"n_max must be a positive integer, got {n_max!r}")
    out = []
    for n in range(1, n_max + 1):
        t = 3 * n * n - 3 * n + 1
        if (t * (t + 1) // 2) % (2 * n - 1) == 0:
            out.append(n)
    return out
