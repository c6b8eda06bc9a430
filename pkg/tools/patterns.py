"""Transversal patterns of hexagonal grids, used to build template data.

A transversal is a set of 2n-1 cells containing exactly one cell of every
line in all three directions; its 0/1 indicator hexagon has every line sum
equal to 1.  Equivalently: a permutation q = sigma(r) of -(n-1)..(n-1) such
that r + sigma(r) is also a permutation of that interval.
"""

from __future__ import annotations

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from hexmagic.grid import HexCoord  # noqa: E402


def transversals(order: int, forbidden: frozenset = frozenset(), limit: int | None = None):
    """Yield transversals (tuples of HexCoord) avoiding ``forbidden`` cells."""
    m = order - 1
    rs = list(range(-m, m + 1))
    used_q: set[int] = set()
    used_s: set[int] = set()
    cur: list[HexCoord] = []
    out: list[tuple[HexCoord, ...]] = []

    def rec(i: int) -> bool:
        if limit is not None and len(out) >= limit:
            return True
        if i == len(rs):
            out.append(tuple(cur))
            return limit is not None and len(out) >= limit
        r = rs[i]
        for q in range(-m, m + 1):
            if q in used_q:
                continue
            s = -q - r
            if abs(s) > m or s in used_s:
                continue
            c = HexCoord(q, r)
            if c in forbidden:
                continue
            used_q.add(q)
            used_s.add(s)
            cur.append(c)
            if rec(i + 1):
                return True
            used_q.remove(q)
            used_s.remove(s)
            cur.pop()
        return False

    rec(0)
    return out


def disjoint_family(order: int, count: int, seed_cells: frozenset = frozenset()):
    """Find ``count`` pairwise-disjoint transversals by backtracking."""
    found: list[tuple[HexCoord, ...]] = []

    def rec(forbidden: frozenset) -> bool:
        if len(found) == count:
            return True
        for t in transversals(order, forbidden, limit=200):
            found.append(t)
            if rec(forbidden | frozenset(t)):
                return True
            found.pop()
        return False

    if rec(seed_cells):
        return found
    raise RuntimeError(f"no family of {count} disjoint transversals at order {order}")


if __name__ == "__main__":
    for n in range(2, 8):
        ts = transversals(n, limit=5)
        print(f"order {n}: first transversal {ts[0] if ts else None}, found {len(ts)}")
    tri = disjoint_family(3, 3)
    print("order-3 disjoint triple:")
    for t in tri:
        print("  ", t)
    fam7 = disjoint_family(7, 7)
    print("order-7 disjoint family of 7: OK")
