"""Centred hexagonal grids: coordinates, cell storage, lines, symmetries, text I/O.

A grid of order n has n cells on each edge and 3n^2-3n+1 cells in total.
Cells are addressed by axial coordinates (q, r) with the implicit third
coordinate s = -q-r, so the three line directions are simply "constant r"
(rows), "constant q" and "constant s" (the two diagonal families).
All cell values are exact rationals; nothing in this module touches floats.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, NamedTuple, Sequence, Union

Rational = Union[int, Fraction, str]


class HexFormatError(ValueError):
    """Raised when hexagon text does not conform to the file format."""


class HexCoord(NamedTuple):
    """Axial coordinate on the hexagonal grid (q + r + s = 0)."""

    q: int
    r: int

    @property
    def s(self) -> int:
        return -self.q - self.r

    def in_bounds(self, order: int) -> bool:
        return max(abs(self.q), abs(self.r), abs(self.s)) <= order - 1


def cell_count(order: int) -> int:
    """Number of cells of a grid of the given order: 3n^2 - 3n + 1."""
    _check_order(order)
    return 3 * order * order - 3 * order + 1


def _check_order(order: int) -> None:
    if not isinstance(order, int) or order < 1:
        raise ValueError(f"order must be a positive integer, got {order!r}")


@lru_cache(maxsize=None)
def grid_coords(order: int) -> tuple[HexCoord, ...]:
    """All in-bounds coordinates, row-major: r ascending, then q ascending."""
    _check_order(order)
    m = order - 1
    out = []
    for r in range(-m, m + 1):
        for q in range(max(-m, -m - r), min(m, m - r) + 1):
            out.append(HexCoord(q, r))
    return tuple(out)


@lru_cache(maxsize=None)
def _coord_index(order: int) -> dict[HexCoord, int]:
    return {c: i for i, c in enumerate(grid_coords(order))}


def row_lengths(order: int) -> tuple[int, ...]:
    """Row lengths top to bottom: n, n+1, ..., 2n-1, ..., n+1, n."""
    m = order - 1
    return tuple(2 * order - 1 - abs(r) for r in range(-m, m + 1))


def _to_fraction(value: Rational) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"cell values must be exact rationals, got {type(value).__name__}")


class Hexagon:
    """Immutable assignment of an exact rational to every cell of a grid.

    Construct from a coordinate mapping, or via :meth:`from_rows` /
    :meth:`from_values` in the row-major order of :func:`grid_coords`.
    """

    __slots__ = ("order", "_values")

    def __init__(self, order: int, cells: Mapping[HexCoord, Rational]):
        _check_order(order)
        coords = grid_coords(order)
        if len(cells) != len(coords):
            raise ValueError(
                f"order-{order} hexagon needs {len(coords)} cells, got {len(cells)}"
            )
        try:
            values = tuple(_to_fraction(cells[c]) for c in coords)
        except KeyError as exc:
            raise ValueError(f"missing cell {exc.args[0]} for order {order}") from None
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "_values", values)

    @classmethod
    def from_values(cls, order: int, values: Iterable[Rational]) -> "Hexagon":
        coords = grid_coords(order)
        vals = list(values)
        if len(vals) != len(coords):
            raise ValueError(
                f"order-{order} hexagon needs {len(coords)} values, got {len(vals)}"
            )
        return cls(order, dict(zip(coords, vals)))

    @classmethod
    def from_rows(cls, order: int, rows: Sequence[Sequence[Rational]]) -> "Hexagon":
        expected = row_lengths(order)
        if len(rows) != len(expected):
            raise ValueError(f"order-{order} hexagon needs {len(expected)} rows")
        for i, (row, want) in enumerate(zip(rows, expected)):
            if len(row) != want:
                raise ValueError(f"row {i} must have {want} values, got {len(row)}")
        return cls.from_values(order, [v for row in rows for v in row])

    @classmethod
    def constant(cls, order: int, value: Rational) -> "Hexagon":
        return cls.from_values(order, [value] * cell_count(order))

    def __setattr__(self, name, value):
        raise AttributeError("Hexagon is immutable")

    def __getitem__(self, coord: HexCoord) -> Fraction:
        return self._values[_coord_index(self.order)[HexCoord(*coord)]]

    def values(self) -> tuple[Fraction, ...]:
        """Cell values in row-major coordinate order."""
        return self._values

    @property
    def cells(self) -> dict[HexCoord, Fraction]:
        return dict(zip(grid_coords(self.order), self._values))

    def rows(self) -> list[list[Fraction]]:
        out, it = [], iter(self._values)
        for length in row_lengths(self.order):
            out.append([next(it) for _ in range(length)])
        return out

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self._values)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Hexagon)
            and self.order == other.order
            and self._values == other._values
        )

    def __hash__(self) -> int:
        return hash((self.order, self._values))

    def __repr__(self) -> str:
        return f"Hexagon(order={self.order}, values={self._values!r})"


@dataclass(frozen=True)
class LineSet:
    """The 3(2n-1) lines of an order-n grid, grouped by direction.

    Deterministic order: rows by r ascending, then constant-q lines by q
    ascending, then constant-s lines by s ascending; within each line the
    coordinates run row-major.
    """

    order: int
    lines: tuple[tuple[HexCoord, ...], ...]

    @property
    def rows(self) -> tuple[tuple[HexCoord, ...], ...]:
        k = 2 * self.order - 1
        return self.lines[:k]

    @property
    def q_lines(self) -> tuple[tuple[HexCoord, ...], ...]:
        k = 2 * self.order - 1
        return self.lines[k : 2 * k]

    @property
    def s_lines(self) -> tuple[tuple[HexCoord, ...], ...]:
        k = 2 * self.order - 1
        return self.lines[2 * k :]


@lru_cache(maxsize=None)
def line_set(order: int) -> LineSet:
    """Rows, constant-q and constant-s lines of the order-n grid."""
    _check_order(order)
    coords = grid_coords(order)
    m = order - 1
    rows = tuple(
        tuple(c for c in coords if c.r == r) for r in range(-m, m + 1)
    )
    q_lines = tuple(
        tuple(c for c in coords if c.q == q) for q in range(-m, m + 1)
    )
    s_lines = tuple(
        tuple(c for c in coords if c.s == s) for s in range(-m, m + 1)
    )
    return LineSet(order, rows + q_lines + s_lines)


def line_sums(h: Hexagon) -> tuple[Fraction, ...]:
    """Sum over every line, in the deterministic line_set order."""
    idx = _coord_index(h.order)
    vals = h.values()
    return tuple(
        sum(vals[idx[c]] for c in line) for line in line_set(h.order).lines
    )


class SymmetryOp(NamedTuple):
    """Element of the dihedral symmetry group of the grid (order 12).

    ``rotations`` counts 60-degree rotations (0..5); when ``reflect`` is set
    the reflection is applied first, then the rotation.  The 60-degree
    rotation maps (q, r) -> (-r, q+r); the reflection maps (q, r) -> (q, s).
    """

    rotations: int
    reflect: bool

    def apply(self, coord: HexCoord) -> HexCoord:
        q, r = coord.q, coord.r
        if self.reflect:
            q, r = q, -q - r
        for _ in range(self.rotations % 6):
            q, r = -r, q + r
        return HexCoord(q, r)

    def compose(self, other: "SymmetryOp") -> "SymmetryOp":
        """The op equivalent to applying ``other`` first, then ``self``."""
        if self.reflect:
            # ref . rot^b = rot^(-b) . ref, so rot^a.ref.rot^b.ref^f
            # = rot^(a-b).ref^(1+f).
            rot = (self.rotations - other.rotations) % 6
        else:
            rot = (self.rotations + other.rotations) % 6
        return SymmetryOp(rot, self.reflect ^ other.reflect)

    def inverse(self) -> "SymmetryOp":
        if self.reflect:
            return SymmetryOp(self.rotations % 6, True)
        return SymmetryOp((-self.rotations) % 6, False)


IDENTITY = SymmetryOp(0, False)

SYMMETRY_GROUP: tuple[SymmetryOp, ...] = tuple(
    SymmetryOp(k, ref) for ref in (False, True) for k in range(6)
)


def apply_symmetry(h: Hexagon, op: SymmetryOp) -> Hexagon:
    """Image of ``h`` under ``op``: the value at c moves to op(c)."""
    return Hexagon(h.order, {op.apply(c): v for c, v in zip(grid_coords(h.order), h.values())})


def canonical_form(h: Hexagon) -> Hexagon:
    """The symmetry image whose row-major value sequence is smallest.

    Lexicographic comparison of exact rational values; idempotent, and equal
    for all 12 images of a hexagon, so it defines orbit representatives.
    """
    return min((apply_symmetry(h, op) for op in SYMMETRY_GROUP), key=Hexagon.values)


FORMAT_HEADER = "hexmagic v1"


def render(h: Hexagon) -> str:
    """Serialize to the ``hexmagic v1`` text format (bit-exact round trip)."""
    lines = [FORMAT_HEADER, f"order: {h.order}"]
    for row in h.rows():
        lines.append("row: " + " ".join(str(v) for v in row))
    return "\n".join(lines) + "\n"


_RATIONAL_RE = re.compile(r"-?\d+(/[1-9]\d*)?\Z")


def _parse_value(token: str) -> Fraction:
    if not _RATIONAL_RE.match(token):
        raise HexFormatError(f"malformed rational {token!r}")
    value = Fraction(token)
    if "/" in token:
        num, den = token.split("/")
        if value.denominator == 1 or (abs(value.numerator), value.denominator) != (
            abs(int(num)),
            int(den),
        ):
            raise HexFormatError(f"rational {token!r} is not in lowest terms")
    return value


def parse(text: str) -> Hexagon:
    """Parse the ``hexmagic v1`` format; strict about shape and rationals.

    Lines starting with ``#`` are comments and are ignored.
    """
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines or lines[0] != FORMAT_HEADER:
        raise HexFormatError(f"missing {FORMAT_HEADER!r} header")
    if len(lines) < 2 or not lines[1].startswith("order:"):
        raise HexFormatError("missing 'order:' line")
    try:
        order = int(lines[1][len("order:") :].strip())
    except ValueError:
        raise HexFormatError(f"bad order line {lines[1]!r}") from None
    if order < 1:
        raise HexFormatError(f"order must be positive, got {order}")
    body = lines[2:]
    expected = row_lengths(order)
    if len(body) != len(expected):
        raise HexFormatError(
            f"order {order} needs {len(expected)} rows, found {len(body)}"
        )
    rows = []
    for i, ln in enumerate(body):
        if not ln.startswith("row:"):
            raise HexFormatError(f"expected 'row:' line, got {ln!r}")
        tokens = ln[len("row:") :].split()
        if len(tokens) != expected[i]:
            raise HexFormatError(
                f"row {i} must have {expected[i]} values, got {len(tokens)}"
            )
        rows.append([_parse_value(t) for t in tokens])
    return Hexagon.from_rows(order, rows)


def read_hexagon(path) -> Hexagon:
    with open(path, "r", encoding="utf-8") as fh:
        return parse(fh.read())


def write_hexagon(h: Hexagon, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(render(h))


def pretty(h: Hexagon) -> str:
    """Centred ASCII layout, one grid row per text line."""
    rows = [[str(v) for v in row] for row in h.rows()]
    width = max(len(t) for row in rows for t in row)
    rendered = [" ".join(t.rjust(width) for t in row) for row in rows]
    total = max(len(ln) for ln in rendered)
    return "\n".join(ln.center(total).rstrip() for ln in rendered)
