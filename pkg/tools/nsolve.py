"""Numba-compiled arrangement solver: unit propagation + cell branching.

Any line with one empty cell is filled immediately (cascading on a trail).
Branching picks an empty cell (row-major first-empty, or the cell with the
fewest in-window remaining values) and tries the feasible values in
randomized order; restarts are seeded and node-capped.
"""

from __future__ import annotations

import sys
from pathlib import Path

import numpy as np
from numba import njit

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from hexmagic.grid import grid_coords, line_set  # noqa: E402

NONE = np.int64(-(10**15))


def _arrays(order: int):
    coords = grid_coords(order)
    idx = {c: i for i, c in enumerate(coords)}
    lines = line_set(order).lines
    cell_lines = np.zeros((len(coords), 3), dtype=np.int64)
    counts = np.zeros(len(coords), dtype=np.int64)
    line_len = np.zeros(len(lines), dtype=np.int64)
    for lid, line in enumerate(lines):
        line_len[lid] = len(line)
        for c in line:
            i = idx[c]
            cell_lines[i, counts[i]] = lid
            counts[i] += 1
    return cell_lines, line_len


@njit(cache=True, inline="always")
def _bisect(rem, rem_n, v):
    lo, hi = 0, rem_n
    while lo < hi:
        mid = (lo + hi) // 2
        if rem[mid] < v:
            lo = mid + 1
        else:
            hi = mid
    return lo


@njit(cache=True)
def _window(cell, cell_lines, line_sum, line_missing, rem, rem_n, target):
    """Intersection [lo, hi] of completability windows of the cell's lines.

    Bounds use the pool including the value to be placed, hence are loose
    and sound.  Returns (lo, hi); infeasible when lo > hi.
    """
    wlo = np.int64(-(10**14))
    whi = np.int64(10**14)
    for k in range(3):
        lid = cell_lines[cell, k]
        missing = line_missing[lid] - 1
        need = target - line_sum[lid]
        if missing == 0:
            if need < wlo or need > whi:
                return np.int64(1), np.int64(0)
            wlo = need
            whi = need
        else:
            mn = np.int64(0)
            for i in range(missing):
                mn += rem[i]
            mx = np.int64(0)
            for i in range(rem_n - missing, rem_n):
                mx += rem[i]
            lo = need - mx
            hi = need - mn
            if lo > wlo:
                wlo = lo
            if hi < whi:
                whi = hi
            if wlo > whi:
                return np.int64(1), np.int64(0)
    return wlo, whi


@njit(cache=True)
def _lines_ok(n_lines, line_sum, line_missing, rem, rem_n, target):
    for lid in range(n_lines):
        missing = line_missing[lid]
        need = target - line_sum[lid]
        if missing == 0:
            if need != 0:
                return False
        elif missing == 1:
            i = _bisect(rem, rem_n, need)
            if i >= rem_n or rem[i] != need:
                return False
        else:
            lo = np.int64(0)
            for i in range(missing):
                lo += rem[i]
            if need < lo:
                return False
            hi = np.int64(0)
            for i in range(rem_n - missing, rem_n):
                hi += rem[i]
            if need > hi:
                return False
    return True


@njit(cache=True)
def _solve(values, cell_lines, line_len, target, seed, restarts, node_cap, mrv,
           fixed, pre_extreme):
    """``fixed[c] != NONE`` pins cell c; ``values`` are the free values only.

    With ``pre_extreme = k``, the first k branch depths place the k most
    extreme values into randomly ordered feasible cells before cell-MRV
    branching takes over; settling the outliers first tightens every
    completability window.
    """
    n = fixed.shape[0]
    n_free = values.shape[0]
    n_lines = line_len.shape[0]
    np.random.seed(seed)

    assigned = np.full(n, NONE, dtype=np.int64)
    rem = np.zeros(n_free, dtype=np.int64)
    line_sum = np.zeros(n_lines, dtype=np.int64)
    line_missing = np.zeros(n_lines, dtype=np.int64)
    line_cellsum = np.zeros(n_lines, dtype=np.int64)  # sum of empty cell ids

    trail_cell = np.zeros(4 * n, dtype=np.int64)
    trail_val = np.zeros(4 * n, dtype=np.int64)

    branch_cell = np.zeros(n, dtype=np.int64)
    branch_val = np.zeros(n, dtype=np.int64)
    value_mode = np.zeros(n, dtype=np.int64)  # 1: cand holds cells for a value
    cand = np.zeros((n, n), dtype=np.int64)
    cand_cnt = np.zeros(n, dtype=np.int64)
    cand_pos = np.zeros(n, dtype=np.int64)
    place_mark = np.zeros(n, dtype=np.int64)

    # free values ordered by extremity (|v| descending, ties toward negative)
    ext_order = np.zeros(n_free, dtype=np.int64)
    taken = np.zeros(n_free, dtype=np.bool_)
    for i in range(n_free):
        best_j = -1
        for j in range(n_free):
            if taken[j]:
                continue
            if best_j < 0:
                best_j = j
            else:
                aj = values[j] if values[j] >= 0 else -values[j]
                ab = values[best_j] if values[best_j] >= 0 else -values[best_j]
                if aj > ab or (aj == ab and values[j] < values[best_j]):
                    best_j = j
        taken[best_j] = True
        ext_order[i] = values[best_j]

    base_cellsum = np.zeros(n_lines, dtype=np.int64)
    base_sum = np.zeros(n_lines, dtype=np.int64)
    base_missing = np.zeros(n_lines, dtype=np.int64)
    for lid in range(n_lines):
        base_missing[lid] = line_len[lid]
    for c in range(n):
        if fixed[c] == NONE:
            for k in range(3):
                base_cellsum[cell_lines[c, k]] += c
        else:
            for k in range(3):
                base_sum[cell_lines[c, k]] += fixed[c]
                base_missing[cell_lines[c, k]] -= 1

    total_nodes = np.int64(0)
    for _attempt in range(restarts):
        for c in range(n):
            assigned[c] = fixed[c]
        rem_n = n_free
        for i in range(n_free):
            rem[i] = values[i]
        for lid in range(n_lines):
            line_sum[lid] = base_sum[lid]
            line_missing[lid] = base_missing[lid]
            line_cellsum[lid] = base_cellsum[lid]
        trail_n = 0
        nodes = 0
        depth = 0
        need_candidates = True

        # initial propagation: fixed cells may force lines from the start
        ok0 = _lines_ok(n_lines, line_sum, line_missing, rem, rem_n, target)
        while ok0:
            forced_lid = -1
            for lid in range(n_lines):
                if line_missing[lid] == 1:
                    forced_lid = lid
                    break
            if forced_lid < 0:
                break
            fc = line_cellsum[forced_lid]
            fv = target - line_sum[forced_lid]
            i = _bisect(rem, rem_n, fv)
            if i >= rem_n or rem[i] != fv:
                ok0 = False
                break
            assigned[fc] = fv
            for j in range(i, rem_n - 1):
                rem[j] = rem[j + 1]
            rem_n -= 1
            for k in range(3):
                lid = cell_lines[fc, k]
                line_sum[lid] += fv
                line_missing[lid] -= 1
                line_cellsum[lid] -= fc
            ok0 = _lines_ok(n_lines, line_sum, line_missing, rem, rem_n, target)
        if not ok0:
            break  # unsatisfiable given the fixed cells; restarts won't differ

        while True:
            if rem_n == 0:
                return assigned, np.int64(1), total_nodes
            if need_candidates:
                value_mode[depth] = 0
                ev = ext_order[depth] if depth < pre_extreme else NONE
                if ev != NONE:
                    i = _bisect(rem, rem_n, ev)
                    if i >= rem_n or rem[i] != ev:
                        ev = NONE  # already placed by a cascade
                if ev != NONE:
                    # value mode: choose a cell for this extreme value
                    value_mode[depth] = 1
                    branch_val[depth] = ev
                    cnt = 0
                    for c in range(n):
                        if assigned[c] != NONE:
                            continue
                        wlo, whi = _window(c, cell_lines, line_sum,
                                           line_missing, rem, rem_n, target)
                        if wlo <= ev <= whi:
                            cand[depth, cnt] = c
                            cnt += 1
                    for i in range(cnt - 1, 0, -1):
                        j = np.random.randint(i + 1)
                        cand[depth, i], cand[depth, j] = cand[depth, j], cand[depth, i]
                else:
                    # cell mode: branch the cell with the fewest feasible
                    # values (ties broken uniformly at random)
                    bc = -1
                    if mrv:
                        best = np.int64(10**15)
                        ties = np.int64(0)
                        for c in range(n):
                            if assigned[c] != NONE:
                                continue
                            wlo, whi = _window(c, cell_lines, line_sum,
                                               line_missing, rem, rem_n, target)
                            if wlo > whi:
                                cnt_c = np.int64(0)
                            else:
                                cnt_c = np.int64(
                                    _bisect(rem, rem_n, whi + 1)
                                    - _bisect(rem, rem_n, wlo)
                                )
                            if cnt_c < best:
                                best = cnt_c
                                bc = c
                                ties = 1
                                if best == 0:
                                    break
                            elif cnt_c == best:
                                ties += 1
                                if np.random.randint(ties) == 0:
                                    bc = c
                    else:
                        for c in range(n):
                            if assigned[c] == NONE:
                                bc = c
                                break
                    branch_cell[depth] = bc
                    wlo, whi = _window(bc, cell_lines, line_sum, line_missing,
                                       rem, rem_n, target)
                    cnt = 0
                    if wlo <= whi:
                        i0 = _bisect(rem, rem_n, wlo)
                        prev = NONE
                        for i in range(i0, rem_n):
                            v = rem[i]
                            if v > whi:
                                break
                            if v != prev:
                                cand[depth, cnt] = v
                                cnt += 1
                                prev = v
                    for i in range(cnt - 1, 0, -1):
                        j = np.random.randint(i + 1)
                        cand[depth, i], cand[depth, j] = cand[depth, j], cand[depth, i]
                cand_cnt[depth] = cnt
                cand_pos[depth] = 0
                need_candidates = False

            if cand_pos[depth] >= cand_cnt[depth]:
                depth -= 1
                if depth < 0:
                    break
                while trail_n > place_mark[depth]:
                    trail_n -= 1
                    c2 = trail_cell[trail_n]
                    v2 = trail_val[trail_n]
                    assigned[c2] = NONE
                    i = _bisect(rem, rem_n, v2)
                    for j in range(rem_n, i, -1):
                        rem[j] = rem[j - 1]
                    rem[i] = v2
                    rem_n += 1
                    for k in range(3):
                        lid = cell_lines[c2, k]
                        line_sum[lid] -= v2
                        line_missing[lid] += 1
                        line_cellsum[lid] += c2
                cand_pos[depth] += 1
                continue

            nodes += 1
            total_nodes += 1
            if nodes > node_cap:
                break

            if value_mode[depth]:
                c = cand[depth, cand_pos[depth]]
                v = branch_val[depth]
            else:
                c = branch_cell[depth]
                v = cand[depth, cand_pos[depth]]
            place_mark[depth] = trail_n
            # place + cascade
            assigned[c] = v
            i = _bisect(rem, rem_n, v)
            for j in range(i, rem_n - 1):
                rem[j] = rem[j + 1]
            rem_n -= 1
            for k in range(3):
                lid = cell_lines[c, k]
                line_sum[lid] += v
                line_missing[lid] -= 1
                line_cellsum[lid] -= c
            trail_cell[trail_n] = c
            trail_val[trail_n] = v
            trail_n += 1
            ok = _lines_ok(n_lines, line_sum, line_missing, rem, rem_n, target)
            while ok:
                forced_lid = -1
                for lid in range(n_lines):
                    if line_missing[lid] == 1:
                        forced_lid = lid
                        break
                if forced_lid < 0:
                    break
                fc = line_cellsum[forced_lid]
                fv = target - line_sum[forced_lid]
                i = _bisect(rem, rem_n, fv)
                if i >= rem_n or rem[i] != fv:
                    ok = False
                    break
                assigned[fc] = fv
                for j in range(i, rem_n - 1):
                    rem[j] = rem[j + 1]
                rem_n -= 1
                for k in range(3):
                    lid = cell_lines[fc, k]
                    line_sum[lid] += fv
                    line_missing[lid] -= 1
                    line_cellsum[lid] -= fc
                trail_cell[trail_n] = fc
                trail_val[trail_n] = fv
                trail_n += 1
                ok = _lines_ok(n_lines, line_sum, line_missing, rem, rem_n, target)
            if ok:
                depth += 1
                need_candidates = True
            else:
                while trail_n > place_mark[depth]:
                    trail_n -= 1
                    c2 = trail_cell[trail_n]
                    v2 = trail_val[trail_n]
                    assigned[c2] = NONE
                    i = _bisect(rem, rem_n, v2)
                    for j in range(rem_n, i, -1):
                        rem[j] = rem[j - 1]
                    rem[i] = v2
                    rem_n += 1
                    for k in range(3):
                        lid = cell_lines[c2, k]
                        line_sum[lid] -= v2
                        line_missing[lid] += 1
                        line_cellsum[lid] += c2
                cand_pos[depth] += 1
    return assigned, np.int64(0), total_nodes


def solve_arrangement(order: int, entries, target: int, seed: int = 1,
                      restarts: int = 10_000, node_cap: int = 1_000_000,
                      mrv: bool = False, pre_extreme: int = 0):
    cell_lines, line_len = _arrays(order)
    values = np.array(sorted(int(v) for v in entries), dtype=np.int64)
    fixed = np.full(values.shape[0], NONE, dtype=np.int64)
    assigned, found, nodes = _solve(values, cell_lines, line_len,
                                    np.int64(target), np.int64(seed),
                                    np.int64(restarts), np.int64(node_cap),
                                    mrv, fixed, np.int64(pre_extreme))
    if not found:
        return None
    return [int(v) for v in assigned]


def repair(order: int, board, free_cells, target: int, seed: int = 1,
           restarts: int = 8, node_cap: int = 2_000_000):
    """Rearrange the values currently on ``free_cells`` so all lines hit target.

    ``board`` is a full row-major value list; returns the repaired board or
    None.  Complete search over the freed cells (MRV), so a None with a large
    cap is strong evidence the neighborhood has no exact completion.
    """
    cell_lines, line_len = _arrays(order)
    n = len(board)
    fixed = np.array([int(v) for v in board], dtype=np.int64)
    free_values = sorted(int(board[c]) for c in free_cells)
    for c in free_cells:
        fixed[c] = NONE
    values = np.array(free_values, dtype=np.int64)
    assigned, found, nodes = _solve(values, cell_lines, line_len,
                                    np.int64(target), np.int64(seed),
                                    np.int64(restarts), np.int64(node_cap),
                                    True, fixed, np.int64(0))
    if not found:
        return None
    return [int(v) for v in assigned]


if __name__ == "__main__":
    import time

    from hexmagic.grid import Hexagon
    from hexmagic.verify import verify

    L0 = [-69, -63, -61, -49, -45, -44, -30, -27, -24, -23, -22, -21, -20,
          -20, -15, -14, -11, -10, -9, -7, -6, -4, -2, 0, 2, 3, 6, 12, 25,
          30, 53, 56, 57, 63, 68, 77, 144]
    for mrv in (False, True):
        t0 = time.time()
        vals = solve_arrangement(4, range(3, 40), 111, seed=5, restarts=200,
                                 node_cap=200_000, mrv=mrv)
        print(f"3..39 mrv={mrv}: {time.time()-t0:.1f}s ->",
              "found" if vals else "FAILED")
        if vals:
            rep = verify(Hexagon.from_values(4, vals))
            assert rep.magic_sum == 111
    for mrv in (False, True):
        t0 = time.time()
        vals = solve_arrangement(4, L0, 0, seed=9, restarts=200,
                                 node_cap=200_000, mrv=mrv)
        print(f"L0 mrv={mrv}: {time.time()-t0:.1f}s ->",
              "found" if vals else "FAILED")
        if vals:
            rep = verify(Hexagon.from_values(4, vals))
            print("M =", rep.magic_sum)
            print(vals)
