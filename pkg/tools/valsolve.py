"""Value-ordered randomized search: place extreme entries first.

Assigns the multiset values in fixed order of descending magnitude (ties
deterministic) and picks a cell for each value, with full-board feasibility
propagation after every placement: because the remaining pool at each depth
is a static suffix, every line's completability window costs O(1) via
precomputed prefix sums.  Randomized cell order per restart, node-capped.
"""

from __future__ import annotations

import random
import sys
from collections import Counter
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from hexmagic.grid import grid_coords, line_set  # noqa: E402


def solve_by_values(order: int, entries, target: int, seed: int = 1,
                    restarts: int = 1000, node_cap: int = 200_000):
    """Arrangement with all line sums == target, or None."""
    coords = grid_coords(order)
    n = len(coords)
    idx = {c: i for i, c in enumerate(coords)}
    lines = [tuple(idx[c] for c in line) for line in line_set(order).lines]
    cell_lines = [[] for _ in range(n)]
    for lid, line in enumerate(lines):
        for c in line:
            cell_lines[c].append(lid)

    values = sorted((int(v) for v in entries), key=lambda v: (-abs(v), v))
    if len(values) != n:
        raise ValueError("entry count does not match the grid size")

    # rem_min_sum[k][j] = sum of the j smallest of values[k:]; likewise max.
    rem_min, rem_max, rem_count = [], [], []
    for k in range(n + 1):
        rest = sorted(values[k:])
        pre = [0]
        for v in rest:
            pre.append(pre[-1] + v)
        suf = [0]
        for v in reversed(rest):
            suf.append(suf[-1] + v)
        rem_min.append(pre)
        rem_max.append(suf)
        rem_count.append(Counter(rest))

    for attempt in range(restarts):
        rng = random.Random(seed * 99991 + attempt)
        got = _try_once(n, lines, cell_lines, values, target, rng, node_cap,
                        rem_min, rem_max, rem_count)
        if got is not None:
            return got
    return None


def _try_once(n, lines, cell_lines, values, target, rng, node_cap,
              rem_min, rem_max, rem_count):
    line_sum = [0] * len(lines)
    line_missing = [len(line) for line in lines]
    line_cells = [set(line) for line in lines]  # empty cells per line
    assigned = [None] * n
    nodes = 0

    def board_feasible(depth):
        """Every line must remain completable from values[depth:]."""
        forced: dict[int, int] = {}
        for lid in range(len(lines)):
            missing = line_missing[lid]
            need = target - line_sum[lid]
            if missing == 0:
                if need:
                    return False
            elif missing == 1:
                if rem_count[depth][need] == 0:
                    return False
                cell = next(iter(line_cells[lid]))
                if forced.setdefault(cell, need) != need:
                    return False
            else:
                if need < rem_min[depth][missing] or need > rem_max[depth][missing]:
                    return False
        # forced cells must not demand more copies of a value than remain
        if forced:
            demand = Counter(forced.values())
            for v, k in demand.items():
                if rem_count[depth][v] < k:
                    return False
        return True

    def dfs(depth) -> bool:
        nonlocal nodes
        if depth == n:
            return True
        nodes += 1
        if nodes > node_cap:
            raise _Abort
        v = values[depth]
        cells = [c for c in range(n) if assigned[c] is None]
        rng.shuffle(cells)
        for c in cells:
            ok = True
            for lid in cell_lines[c]:
                missing = line_missing[lid] - 1
                need = target - line_sum[lid] - v
                if missing == 0:
                    if need:
                        ok = False
                        break
                elif need < rem_min[depth + 1][missing] or need > rem_max[depth + 1][missing]:
                    ok = False
                    break
            if not ok:
                continue
            assigned[c] = v
            for lid in cell_lines[c]:
                line_sum[lid] += v
                line_missing[lid] -= 1
                line_cells[lid].discard(c)
            if board_feasible(depth + 1) and dfs(depth + 1):
                return True
            assigned[c] = None
            for lid in cell_lines[c]:
                line_sum[lid] -= v
                line_missing[lid] += 1
                line_cells[lid].add(c)
        return False

    try:
        if dfs(0):
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
    vals = solve_by_values(4, L0, 0, seed=5, restarts=120, node_cap=150_000)
    print(f"L0: {time.time()-t0:.1f}s ->", "found" if vals else "FAILED")
    if vals:
        rep = verify(Hexagon.from_values(4, vals))
        print("M =", rep.magic_sum, "range", rep.entry_min, rep.entry_max)
