"""Randomized-restart backtracking arrangement of a multiset into a magic hexagon.

Complete search per restart (up to a node cap) with dynamic most-constrained
cell selection and randomized value order; used offline for corpus instances
whose solutions are too rare for annealing.  Deterministic per seed.
"""

from __future__ import annotations

import random
import sys
from bisect import bisect_left, bisect_right, insort
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from hexmagic.grid import grid_coords, line_set  # noqa: E402


def solve_arrangement(order: int, entries, target: int, seed: int = 1,
                      restarts: int = 400, node_cap: int = 300_000):
    """Place ``entries`` (ints) so all line sums equal ``target``; None if not found."""
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
        rng = random.Random(seed * 100003 + attempt)
        result = _try_once(n, lines, cell_lines, entries, target, rng, node_cap)
        if result is not None:
            return result
    return None


def _try_once(n, lines, cell_lines, entries, target, rng, node_cap):
    pool = sorted(entries)
    line_sum = [0] * len(lines)
    line_missing = [len(line) for line in lines]
    assigned: list = [None] * n
    empty = set(range(n))
    nodes = 0

    def pick_cell():
        # most-constrained: smallest line deficit, then fewest candidates
        best, best_key = None, None
        for c in empty:
            k = min(line_missing[lid] for lid in cell_lines[c])
            if best_key is None or k < best_key:
                best, best_key = c, k
                if k == 1:
                    break
        return best

    def candidates(cell):
        lo, hi = None, None
        for lid in cell_lines[cell]:
            missing = line_missing[lid]
            need = target - line_sum[lid]
            if missing == 1:
                if lo is None or need > lo:
                    lo = need
                if hi is None or need < hi:
                    hi = need
                if lo > hi:
                    return []
            else:
                mn = sum(pool[: missing - 1])
                mx = sum(pool[-(missing - 1):])
                l, h = need - mx, need - mn
                if lo is None or l > lo:
                    lo = l
                if hi is None or h < hi:
                    hi = h
        if lo is None:
            vals = list(dict.fromkeys(pool))
        else:
            if lo > hi:
                return []
            i, j = bisect_left(pool, lo), bisect_right(pool, hi)
            vals = list(dict.fromkeys(pool[i:j]))
        rng.shuffle(vals)
        return vals

    def feasible_after(cell):
        for lid in cell_lines[cell]:
            missing = line_missing[lid]
            need = target - line_sum[lid]
            if missing == 0:
                if need != 0:
                    return False
            elif missing == 1:
                i = bisect_left(pool, need)
                if i == len(pool) or pool[i] != need:
                    return False
            else:
                if need < sum(pool[:missing]) or need > sum(pool[-missing:]):
                    return False
        return True

    def dfs() -> bool:
        nonlocal nodes
        if not empty:
            return True
        nodes += 1
        if nodes > node_cap:
            raise _Abort
        cell = pick_cell()
        empty.discard(cell)
        for v in candidates(cell):
            i = bisect_left(pool, v)
            if i == len(pool) or pool[i] != v:
                continue
            assigned[cell] = v
            del pool[i]
            for lid in cell_lines[cell]:
                line_sum[lid] += v
                line_missing[lid] -= 1
            if feasible_after(cell) and dfs():
                return True
            insort(pool, v)
            for lid in cell_lines[cell]:
                line_sum[lid] -= v
                line_missing[lid] += 1
            assigned[cell] = None
        empty.add(cell)
        return False

    try:
        if dfs():
            return list(assigned)
    except _Abort:
        pass
    return None


class _Abort(Exception):
    pass


if __name__ == "__main__":
    import time

    from hexmagic.grid import Hexagon
    from hexmagic.verify import verify

    L0 = [-69, -63, -61, -49, -45, -44, -30, -27, -24, -23, -22, -21, -20,
          -20, -15, -14, -11, -10, -9, -7, -6, -4, -2, 0, 2, 3, 6, 12, 25,
          30, 53, 56, 57, 63, 68, 77, 144]
    t0 = time.time()
    vals = solve_arrangement(4, L0, 0, seed=7)
    print(f"L0: {time.time()-t0:.1f}s ->", "found" if vals else "FAILED")
    if vals:
        rep = verify(Hexagon.from_values(4, vals))
        print("M =", rep.magic_sum, "range", rep.entry_min, rep.entry_max)
