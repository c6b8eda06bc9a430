"""Large-neighborhood search: anneal close, then exact repair of bad lines.

The annealer gets an arrangement down to a handful of violated lines; the
repair step frees every cell on those lines (plus random extras) and runs a
complete propagation search over just that neighborhood.  Loops with kicks
until the exact arrangement appears.
"""

from __future__ import annotations

import random
import sys
import time
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))
sys.path.insert(0, str(Path(__file__).resolve().parents[0]))

from anneal import _line_arrays, _anneal_once  # noqa: E402
from nsolve import repair  # noqa: E402

from hexmagic.grid import grid_coords, line_set  # noqa: E402


def lns_arrange(order: int, entries, target: int, seed: int = 1,
                rounds: int = 10_000, max_free: int = 26,
                time_limit: float | None = None, stats: list | None = None):
    coords = grid_coords(order)
    idx = {c: i for i, c in enumerate(coords)}
    lines = [tuple(idx[c] for c in line) for line in line_set(order).lines]
    members, lengths, cell_lines = _line_arrays(order)
    values = np.array(sorted(int(v) for v in entries), dtype=np.int64)
    rng = random.Random(seed)
    t0 = time.time()

    for rnd in range(rounds):
        if time_limit is not None and time.time() - t0 > time_limit:
            return None
        vals, cost = _anneal_once(values, cell_lines, members, lengths,
                                  np.int64(target), np.int64(seed + 7919 * rnd),
                                  np.int64(1_500_000))
        board = [int(v) for v in vals]
        if cost == 0:
            return board
        for _repair_try in range(30):
            viol = [lid for lid, line in enumerate(lines)
                    if sum(board[c] for c in line) != target]
            if not viol:
                return board
            free = {c for lid in viol for c in lines[lid]}
            if stats is not None:
                stats.append(len(free))
            if len(free) <= max_free:
                pool = [c for c in range(len(board)) if c not in free]
                rng.shuffle(pool)
                for c in pool[: max_free - len(free)]:
                    free.add(c)
                got = repair(order, board, sorted(free), target,
                             seed=rng.randrange(1 << 30), restarts=4,
                             node_cap=1_200_000)
                if got is not None:
                    return got
            # kick a few cells, then first-improvement descent
            cells = list(range(len(board)))
            rng.shuffle(cells)
            picked = cells[:6]
            perm = [board[c] for c in picked]
            rng.shuffle(perm)
            for c, v in zip(picked, perm):
                board[c] = v
            board = _descend(board, lines, target, rng)
    return None


def _descend(board, lines, target, rng):
    """First-improvement 2-swap descent on the L1 line cost."""
    n = len(board)
    cell_lines = [[] for _ in range(n)]
    for lid, line in enumerate(lines):
        for c in line:
            cell_lines[c].append(lid)
    sums = [sum(board[c] for c in line) for line in lines]

    def cost():
        return sum(abs(s - target) for s in sums)

    cur = cost()
    improved = True
    while improved and cur > 0:
        improved = False
        order_pairs = [(i, j) for i in range(n - 1) for j in range(i + 1, n)
                       if board[i] != board[j]]
        rng.shuffle(order_pairs)
        for i, j in order_pairs:
            di = board[j] - board[i]
            delta = 0
            for lid in cell_lines[i]:
                delta += abs(sums[lid] + di - target) - abs(sums[lid] - target)
            for lid in cell_lines[j]:
                delta += abs(sums[lid] - di - target) - abs(sums[lid] - target)
            shared = set(cell_lines[i]) & set(cell_lines[j])
            for lid in shared:
                delta -= abs(sums[lid] + di - target) - abs(sums[lid] - target)
                delta -= abs(sums[lid] - di - target) - abs(sums[lid] - target)
                # shared lines are unchanged by the swap
            if delta < 0:
                for lid in cell_lines[i]:
                    sums[lid] += di
                for lid in cell_lines[j]:
                    sums[lid] -= di
                board[i], board[j] = board[j], board[i]
                cur += delta
                improved = True
                break
    return board


if __name__ == "__main__":
    from hexmagic.grid import Hexagon
    from hexmagic.verify import verify

    L0 = [-69, -63, -61, -49, -45, -44, -30, -27, -24, -23, -22, -21, -20,
          -20, -15, -14, -11, -10, -9, -7, -6, -4, -2, 0, 2, 3, 6, 12, 25,
          30, 53, 56, 57, 63, 68, 77, 144]
    t0 = time.time()
    got = lns_arrange(4, L0, 0, seed=int(sys.argv[1]) if len(sys.argv) > 1 else 1,
                      time_limit=float(sys.argv[2]) if len(sys.argv) > 2 else None)
    print(f"{time.time()-t0:.0f}s:", "FOUND" if got else "not found")
    if got:
        print(got)
        print("M =", verify(Hexagon.from_values(4, got)).magic_sum)
