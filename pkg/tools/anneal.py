"""Simulated-annealing arrangement of a fixed multiset into a magic hexagon.

Used offline to (re)build the bundled corpus: given integer entries and a
target line sum, find a placement whose every line hits the target exactly.
Deterministic for a given seed.  Requires numpy + numba (dev-only deps).
"""

from __future__ import annotations

import sys
from pathlib import Path

import numpy as np
from numba import njit

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from hexmagic.grid import grid_coords, line_set  # noqa: E402


def _line_arrays(order: int):
    coords = grid_coords(order)
    idx = {c: i for i, c in enumerate(coords)}
    lines = line_set(order).lines
    n_lines = len(lines)
    max_len = max(len(l) for l in lines)
    members = np.full((n_lines, max_len), -1, dtype=np.int64)
    lengths = np.zeros(n_lines, dtype=np.int64)
    for li, line in enumerate(lines):
        lengths[li] = len(line)
        for j, c in enumerate(line):
            members[li, j] = idx[c]
    cell_lines = np.zeros((len(coords), 3), dtype=np.int64)
    counts = np.zeros(len(coords), dtype=np.int64)
    for li, line in enumerate(lines):
        for c in line:
            i = idx[c]
            cell_lines[i, counts[i]] = li
            counts[i] += 1
    assert np.all(counts == 3)
    return members, lengths, cell_lines


@njit(cache=True)
def _apply_swap(vals, sums, cell_lines, i, j):
    di = vals[j] - vals[i]
    for k in range(3):
        sums[cell_lines[i, k]] += di
    for k in range(3):
        sums[cell_lines[j, k]] -= di
    vals[i], vals[j] = vals[j], vals[i]


@njit(cache=True)
def _cost(sums, target):
    c = 0
    for li in range(sums.shape[0]):
        c += abs(sums[li] - target)
    return c


@njit(cache=True)
def _try_delta(vals, sums, cell_lines, target, i, j):
    """Exact cost delta for swapping i, j, computed by apply/undo."""
    before = _cost(sums, target)
    _apply_swap(vals, sums, cell_lines, i, j)
    after = _cost(sums, target)
    _apply_swap(vals, sums, cell_lines, i, j)
    return after - before


@njit(cache=True)
def _anneal_once(values, cell_lines, members, lengths, target, seed, sweeps):
    n = values.shape[0]
    n_lines = members.shape[0]
    np.random.seed(seed)
    vals = values.copy()
    np.random.shuffle(vals)
    sums = np.zeros(n_lines, dtype=np.int64)
    for li in range(n_lines):
        for j in range(lengths[li]):
            sums[li] += vals[members[li, j]]
    cost = _cost(sums, target)
    base_temp = max(cost / n_lines, 1.0)
    for cycle in range(12):
        if cost == 0:
            return vals, cost
        # annealing phase with geometric cooling, reheated each cycle
        temp = base_temp / (1.0 + cycle)
        cooling = np.exp(np.log(0.02 / temp) / sweeps) if temp > 0.02 else 1.0
        for step in range(sweeps):
            if cost == 0:
                return vals, cost
            i = np.random.randint(n)
            j = np.random.randint(n)
            if i == j or vals[i] == vals[j]:
                continue
            di = vals[j] - vals[i]
            delta = 0
            for k in range(3):
                li = cell_lines[i, k]
                delta += abs(sums[li] + di - target) - abs(sums[li] - target)
                sums[li] += di
            for k in range(3):
                lj = cell_lines[j, k]
                delta += abs(sums[lj] - di - target) - abs(sums[lj] - target)
                sums[lj] -= di
            if delta <= 0 or np.random.random() < np.exp(-delta / temp):
                vals[i], vals[j] = vals[j], vals[i]
                cost += delta
            else:
                for k in range(3):
                    sums[cell_lines[i, k]] -= di
                for k in range(3):
                    sums[cell_lines[j, k]] += di
            temp *= cooling
        # polish phase: steepest 2-swap descent to a local optimum
        improved = True
        while improved and cost > 0:
            improved = False
            best_d = 0
            best_i = -1
            best_j = -1
            for i in range(n - 1):
                for j in range(i + 1, n):
                    if vals[i] == vals[j]:
                        continue
                    d = _try_delta(vals, sums, cell_lines, target, i, j)
                    if d < best_d:
                        best_d = d
                        best_i = i
                        best_j = j
            if best_i >= 0:
                _apply_swap(vals, sums, cell_lines, best_i, best_j)
                cost += best_d
                improved = True
        if cost == 0:
            return vals, cost
        # escape phase: first-improving 3-cycle (i<-j<-k<-i)
        done = False
        for i in range(n):
            if done:
                break
            for j in range(n):
                if done or i == j:
                    continue
                for k in range(n):
                    if i == k or j == k:
                        continue
                    before = _cost(sums, target)
                    _apply_swap(vals, sums, cell_lines, i, j)
                    _apply_swap(vals, sums, cell_lines, j, k)
                    after = _cost(sums, target)
                    if after < before:
                        cost = after
                        done = True
                        break
                    _apply_swap(vals, sums, cell_lines, j, k)
                    _apply_swap(vals, sums, cell_lines, i, j)
    return vals, cost


def arrange(order: int, entries, target: int, seed: int = 1, restarts: int = 60,
            sweeps: int = 2_000_000):
    """Arrange ``entries`` (ints) on the order-n grid with all line sums == target.

    Returns the cell values in row-major order, or raises after exhausting
    restarts.
    """
    members, lengths, cell_lines = _line_arrays(order)
    values = np.array(sorted(entries), dtype=np.int64)
    if values.shape[0] != len(grid_coords(order)):
        raise ValueError("entry count does not match the grid size")
    for attempt in range(restarts):
        vals, cost = _anneal_once(
            values, cell_lines, members, lengths, np.int64(target),
            np.int64(seed + attempt), np.int64(sweeps),
        )
        if cost == 0:
            return [int(v) for v in vals]
    raise RuntimeError(
        f"annealing failed after {restarts} restarts (order {order}, M={target})"
    )


if __name__ == "__main__":
    import time

    from hexmagic.grid import Hexagon
    from hexmagic.verify import verify

    t0 = time.time()
    vals = arrange(4, range(3, 40), 111, seed=11)
    print(f"order 4 M=111: {time.time()-t0:.1f}s")
    rep = verify(Hexagon.from_values(4, vals))
    print("magic:", rep.is_magic, "M:", rep.magic_sum,
          "range:", rep.entry_min, rep.entry_max)
