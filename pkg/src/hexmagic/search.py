"""Exhaustive, symmetry-aware enumeration of magic hexagons.

Entries from a fixed multiset are assigned depth-first to cells in a fixed
static order (row-major, starting at the short top row, q ascending within a
row), so every completed line is checked as early as the geometry allows.
Pruning is sound: a completed line must hit the target exactly, and a
partial line must still be completable from the smallest/largest remaining
entries.  Labeled solutions are deduplicated into canonical representatives
under the 12-element symmetry group at the end.
"""

from __future__ import annotations

from bisect import bisect_left, insort
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Iterable, Mapping, Union

from .grid import (
    Hexagon,
    HexCoord,
    canonical_form,
    cell_count,
    grid_coords,
    line_set,
)

Rational = Union[int, Fraction, str]

MODES = ("all-solutions", "first-solution", "count-canonical")


class InfeasibleSpecError(ValueError):
    """Raised when no arrangement of the entries can reach the target sum."""


@dataclass(frozen=True)
class SearchSpec:
    """An enumeration task: place ``entries`` so every line sums to ``target_sum``."""

    order: int
    entries: tuple[Fraction, ...]
    target_sum: Fraction
    mode: str = "all-solutions"

    def __post_init__(self):
        object.__setattr__(
            self, "entries", tuple(sorted(Fraction(v) for v in self.entries))
        )
        object.__setattr__(self, "target_sum", Fraction(self.target_sum))
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        need = cell_count(self.order)
        if len(self.entries) != need:
            raise ValueError(
                f"order {self.order} needs {need} entries, got {len(self.entries)}"
            )

    @classmethod
    def normal(cls, order: int, mode: str = "all-solutions") -> "SearchSpec":
        """The normal-hexagon search: entries 1..3n^2-3n+1 at the forced sum."""
        from .verify import normal_magic_sum

        m = normal_magic_sum(order)
        if m is None:
            raise InfeasibleSpecError(
                f"no integral magic sum exists for a normal order-{order} hexagon"
            )
        return cls(
            order,
            tuple(Fraction(v) for v in range(1, cell_count(order) + 1)),
            Fraction(m),
            mode,
        )


@dataclass(frozen=True)
class SearchResult:
    """Canonical solutions (sorted), the labeled count, and nodes expanded."""

    canonical: tuple[Hexagon, ...]
    labeled_count: int
    nodes: int

    def summary(self) -> str:
        return (
            f"solutions: {len(self.canonical)} "
            f"labeled: {self.labeled_count} nodes: {self.nodes}"
        )


def _check_total(spec: SearchSpec) -> None:
    total = sum(spec.entries)
    rows = 2 * spec.order - 1
    if total != spec.target_sum * rows:
        raise InfeasibleSpecError(
            f"entries total {total}, but {rows} rows of {spec.target_sum} "
            f"need {spec.target_sum * rows}"
        )


def _integer_scale(spec: SearchSpec) -> tuple[list[int], int, int]:
    """Scale entries and target to integers (exactness without Fraction cost)."""
    denom = lcm(
        spec.target_sum.denominator, *(v.denominator for v in spec.entries)
    )
    ints = [int(v * denom) for v in spec.entries]
    return ints, int(spec.target_sum * denom), denom


def _cell_lines(order: int) -> list[tuple[int, ...]]:
    """For each cell in static (row-major) order, the ids of its 3 lines."""
    lines = line_set(order).lines
    coords = grid_coords(order)
    index = {coords[i]: i for i in range(len(coords))}
    membership: list[list[int]] = [[] for _ in coords]
    for line_id in range(len(lines)):
        for c in lines[line_id]:
            membership[index[c]].append(line_id)
    return [tuple(m) for m in membership]


def enumerate(spec: SearchSpec, workers: int = 1) -> SearchResult:  # noqa: A001
    """Run the exhaustive search described by ``spec``.

    Deterministic: repeated runs produce identical canonical lists in
    identical order.  With ``workers > 1`` the tree is partitioned by the
    values of the first two cells and merged deterministically.
    """
    _check_total(spec)
    if workers > 1 and cell_count(spec.order) >= 2 and spec.mode != "first-solution":
        return _enumerate_parallel(spec, workers)
    raw, nodes = _search(spec)
    return _finish(spec, raw, nodes)


def _finish(spec: SearchSpec, raw: list[tuple[int, ...]], nodes: int) -> SearchResult:
    _, _, denom = _integer_scale(spec)
    seen = {}
    for values in raw:
        h = Hexagon.from_values(
            spec.order, [Fraction(v, denom) for v in values]
        )
        c = canonical_form(h)
        seen.setdefault(c.values(), c)
    canonical = tuple(seen[k] for k in sorted(seen))
    return SearchResult(canonical, len(raw), nodes)


def _search(
    spec: SearchSpec, prefix: tuple[int, ...] = ()
) -> tuple[list[tuple[int, ...]], int]:
    """Depth-first enumeration; ``prefix`` forces the first placements."""
    order = spec.order
    n_cells = cell_count(order)
    entries, target, _ = _integer_scale(spec)
    cell_lines = _cell_lines(order)
    lines = line_set(order).lines
    line_len = [len(line) for line in lines]

    pool = sorted(entries)  # remaining values, ascending, with multiplicity
    line_sum = [0] * len(lines)
    line_missing = list(line_len)
    assigned = [0] * n_cells
    solutions: list[tuple[int, ...]] = []
    nodes = 0
    first_only = spec.mode == "first-solution"

    def feasible_after(cell: int) -> bool:
        """Exact bound check of the cell's three lines after a placement."""
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
                lo = 0
                for i in range(missing):
                    lo += pool[i]
                if need < lo:
                    return False
                hi = 0
                for i in range(-missing, 0):
                    hi += pool[i]
                if need > hi:
                    return False
        return True

    def place(cell: int, value: int) -> None:
        assigned[cell] = value
        del pool[bisect_left(pool, value)]
        for lid in cell_lines[cell]:
            line_sum[lid] += value
            line_missing[lid] -= 1

    def unplace(cell: int, value: int) -> None:
        insort(pool, value)
        for lid in cell_lines[cell]:
            line_sum[lid] -= value
            line_missing[lid] += 1

    def candidates_for(cell: int):
        """Values worth trying at ``cell``: forced exactly when some line has
        one empty cell left, otherwise windowed by loose completability
        bounds of the cell's lines (loose = computed before removal, so
        never unsound); duplicates collapse to one try."""
        forced = None
        lo = hi = None
        for lid in cell_lines[cell]:
            missing = line_missing[lid]
            need = target - line_sum[lid]
            if missing == 1:
                if forced is not None and forced != need:
                    return ()
                forced = need
            else:
                mn = 0
                for i in range(missing - 1):
                    mn += pool[i]
                mx = 0
                for i in range(-(missing - 1), 0):
                    mx += pool[i]
                l, h = need - mx, need - mn
                if lo is None:
                    lo, hi = l, h
                else:
                    if l > lo:
                        lo = l
                    if h < hi:
                        hi = h
        if forced is not None:
            if lo is not None and not (lo <= forced <= hi):
                return ()
            i = bisect_left(pool, forced)
            if i == len(pool) or pool[i] != forced:
                return ()
            return (forced,)
        i = 0 if lo is None else bisect_left(pool, lo)
        out = []
        prev = None
        while i < len(pool):
            v = pool[i]
            if hi is not None and v > hi:
                break
            if v != prev:
                out.append(v)
                prev = v
            i += 1
        return out

    def dfs(depth: int) -> bool:
        nonlocal nodes
        if depth == n_cells:
            solutions.append(tuple(assigned))
            return first_only
        for value in candidates_for(depth):
            nodes += 1
            place(depth, value)
            if feasible_after(depth):
                if dfs(depth + 1):
                    unplace(depth, value)
                    return True
            unplace(depth, value)
        return False

    ok = True
    for depth in range(len(prefix)):
        value = prefix[depth]
        i = bisect_left(pool, value)
        if i == len(pool) or pool[i] != value:
            ok = False
            break
        nodes += 1
        place(depth, value)
        if not feasible_after(depth):
            ok = False
            break
    if ok:
        dfs(len(prefix))
    return solutions, nodes


def _enumerate_parallel(spec: SearchSpec, workers: int) -> SearchResult:
    import multiprocessing as mp

    entries, _, _ = _integer_scale(spec)
    distinct = sorted(set(entries))
    tasks = []
    for v1 in distinct:
        rest = sorted(set(entries) - {v1}) if entries.count(v1) == 1 else distinct
        for v2 in rest:
            tasks.append((v1, v2))
    ctx = mp.get_context("fork")
    with ctx.Pool(workers) as pool:
        results = pool.starmap(
            _search_task, [(spec, prefix) for prefix in tasks], chunksize=1
        )
    raw: list[tuple[int, ...]] = []
    nodes = 0
    for sols, count in results:
        raw.extend(sols)
        nodes += count
    return _finish(spec, raw, nodes)


def _search_task(spec: SearchSpec, prefix: tuple[int, ...]):
    return _search(spec, prefix)


def is_extension_feasible(
    spec: SearchSpec, placed: Mapping[HexCoord, Rational]
) -> bool:
    """Sound pruning predicate on an arbitrary partial placement.

    False only when no completion of ``placed`` from the remaining entries
    can be magic with the target sum; never prunes a completable partial.
    Mirrors the incremental test used inside the search, so differential
    tests can exercise it in isolation.
    """
    entries, target, denom = _integer_scale(spec)
    placed_scaled = {
        HexCoord(*c): int(Fraction(v) * denom) for c, v in placed.items()
    }
    pool = sorted(entries)
    for v in placed_scaled.values():
        i = bisect_left(pool, v)
        if i == len(pool) or pool[i] != v:
            raise ValueError(f"placed value {v}/{denom} is not among the entries")
        del pool[i]
    for line in line_set(spec.order).lines:
        part = 0
        missing = 0
        for c in line:
            if c in placed_scaled:
                part += placed_scaled[c]
            else:
                missing += 1
        need = target - part
        if missing == 0:
            if need != 0:
                return False
        elif need < sum(pool[:missing]) or need > sum(pool[-missing:]):
            return False
    return True
