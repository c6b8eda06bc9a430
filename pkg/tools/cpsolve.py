"""Constraint solver with unit propagation for magic-hexagon arrangements.

Any line with one empty cell forces that cell's value; such placements
cascade without branching.  Branching picks the most extreme remaining
value and tries its feasible cells in randomized order (seeded restarts).
"""

from __future__ import annotations

import random
import sys
from bisect import bisect_left, insort
from collections import Counter
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from hexmagic.grid import grid_coords, line_set  # noqa: E402


class _Abort(Exception):
    pass


def solve_arrangement(order: int, entries, target: int, seed: int = 1,
                      restarts: int = 2000, node_cap: int = 60_000):
    coords = grid_coords(order)
    n = len(coords)
    idx = {c: i for i, c in enumerate(coords)}
    lines = [tuple(idx[c] for c in line) for line in line_set(order).lines]
    cell_lines = [[] for _ in range(n)]
    for lid, line in enumerate(lines):
        for c in line:
            cell_lines[c].append(lid)
    entries = sorted(int(v) for v in entries)
    if len(entries) != n:
        raise ValueError("entry count does not match the grid size")

    for attempt in range(restarts):
        rng = random.Random(seed * 7919 + attempt)
        got = _restart(n, lines, cell_lines, entries, target, rng, node_cap)
        if got is not None:
            return got
    return None


def _restart(n, lines, cell_lines, entries, target, rng, node_cap):
    pool = sorted(entries)            # remaining values (sorted, multiplicity)
    remaining = Counter(entries)
    line_sum = [0] * len(lines)
    line_missing = [len(line) for line in lines]
    line_empty = [set(line) for line in lines]
    assigned = [None] * n
    nodes = 0

    by_extremity = sorted(set(entries), key=lambda v: (-abs(v), v))

    def place(cell, v):
        assigned[cell] = v
        del pool[bisect_left(pool, v)]
        remaining[v] -= 1
        for lid in cell_lines[cell]:
            line_sum[lid] += v
            line_missing[lid] -= 1
            line_empty[lid].discard(cell)

    def unplace(cell, v):
        assigned[cell] = None
        insort(pool, v)
        remaining[v] += 1
        for lid in cell_lines[cell]:
            line_sum[lid] -= v
            line_missing[lid] += 1
            line_empty[lid].add(cell)

    def lines_feasible() -> bool:
        for lid in range(len(lines)):
            missing = line_missing[lid]
            need = target - line_sum[lid]
            if missing == 0:
                if need:
                    return False
            elif missing == 1:
                if remaining[need] == 0:
                    return False
            else:
                if need < sum(pool[:missing]) or need > sum(pool[-missing:]):
                    return False
        return True

    def propagate(trail) -> bool:
        """Place all forced cells; record placements on trail; False on dead end."""
        while True:
            forced = None
            for lid in range(len(lines)):
                if line_missing[lid] == 1:
                    cell = next(iter(line_empty[lid]))
                    need = target - line_sum[lid]
                    forced = (cell, need)
                    break
            if forced is None:
                return lines_feasible()
            cell, need = forced
            if remaining[need] == 0:
                return False
            place(cell, need)
            trail.append((cell, need))
            if not lines_feasible():
                return False

    def dfs() -> bool:
        nonlocal nodes
        if not pool:
            return True
        nodes += 1
        if nodes > node_cap:
            raise _Abort
        v = next(u for u in by_extremity if remaining[u])
        cells = [c for c in range(n) if assigned[c] is None
                 and all(line_missing[lid] > 1 for lid in cell_lines[c])]
        rng.shuffle(cells)
        for cell in cells:
            place(cell, v)
            trail = [(cell, v)]
            if propagate(trail) and dfs():
                return True
            for c2, v2 in reversed(trail):
                unplace(c2, v2)
        return False

    try:
        trail: list = []
        if propagate(trail) and dfs():
            return list(assigned)
    except _Abort:
        pass
    return None


if __name__ == "__main__":
    import time

    from hexmagic.grid import Hexagon
    from hexmagic.verify import verify

    L0 = [-69, -63, -61, -49, -45, -44, -30, -27, -24, -23, -22, -21, -20,
          -20, -15, -14, -11, -10, -9, -7, -6, -4, -2, 0, 2, 3, 6, 12, 25,
          30, 53, 56, 57, 63, 68, 77, 144]
    t0 = time.time()
    vals = solve_arrangement(4, L0, 0, seed=3, restarts=300, node_cap=40_000)
    print(f"L0: {time.time()-t0:.1f}s ->", "found" if vals else "FAILED")
    if vals:
        rep = verify(Hexagon.from_values(4, vals))
        print("M =", rep.magic_sum, "range", rep.entry_min, rep.entry_max)
