"""Parametric hexagons: cells are linear forms, every line sums to one form.

Covers the built-in templates of orders 3..7 (loaded from bundled data files
and re-validated on load), exact solving of cell/magic-sum constraints, the
Pythagorean zero-sum family, and null-space synthesis which builds a valid
template for any order and any requested magic sum.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from . import linalg
from .forms import LinearForm, format_form, parse_form
from .grid import Hexagon, HexCoord, cell_count, grid_coords, line_set, row_lengths

Rational = Union[int, Fraction, str]

#: Constraint key meaning "the magic sum" in :func:`solve_for_cells`.
MAGIC_SUM = "M"


class InvalidTemplateError(ValueError):
    """Raised when the symbolic line sums of a template are not all equal."""


class UnsatisfiableConstraintsError(ValueError):
    """Raised for contradictory constraints; ``constraints`` names the subset."""

    def __init__(self, constraints: tuple):
        self.constraints = constraints
        super().__init__(
            "constraints are inconsistent: " + "; ".join(map(str, constraints))
        )


@dataclass(frozen=True, eq=False)
class Template:
    """Order-n hexagon of linear forms whose line sums all equal magic_form."""

    order: int
    params: tuple[str, ...]
    cells: dict[HexCoord, LinearForm]
    magic_form: LinearForm

    def __post_init__(self):
        form = template_magic_form(self)
        if form != self.magic_form:
            raise InvalidTemplateError(
                f"declared magic form {self.magic_form} but lines sum to {form}"
            )
        used = {n for f in self.cells.values() for n in f.parameters}
        unknown = used - set(self.params)
        if unknown:
            raise InvalidTemplateError(f"undeclared parameters {sorted(unknown)}")

    @property
    def nullity(self) -> int:
        """Degrees of freedom at a fixed magic sum (parameters not in magic_form)."""
        return len(self.params) - len(self.magic_form.parameters)

    def __getitem__(self, coord: HexCoord) -> LinearForm:
        return self.cells[HexCoord(*coord)]


def template_magic_form(t: Template) -> LinearForm:
    """The shared symbolic line sum; raises if the lines disagree."""
    sums = []
    for line in line_set(t.order).lines:
        total = LinearForm(0)
        for c in line:
            total = total + t.cells[c]
        sums.append(total)
    first = sums[0]
    for i, s in enumerate(sums):
        if s != first:
            raise InvalidTemplateError(
                f"line {i} sums to {s}, expected {first}: not a magic template"
            )
    return first


def make_template(
    order: int,
    params: Sequence[str],
    cells: Mapping[HexCoord, LinearForm],
    magic_form: LinearForm | None = None,
) -> Template:
    """Build and validate a template; magic_form defaults to the computed sum."""
    cells = {HexCoord(*c): f for c, f in cells.items()}
    if set(cells) != set(grid_coords(order)):
        raise InvalidTemplateError(f"cells do not cover the order-{order} grid")
    probe = Template.__new__(Template)
    object.__setattr__(probe, "order", order)
    object.__setattr__(probe, "cells", cells)
    computed = template_magic_form(probe)
    return Template(order, tuple(params), cells, magic_form or computed)


def instantiate(t: Template, assignment: Mapping[str, Rational]) -> Hexagon:
    """Evaluate every cell form; the result is magic with M = magic_form(assignment)."""
    values = {str(k): Fraction(v) for k, v in assignment.items()}
    return Hexagon(t.order, {c: f.evaluate(values) for c, f in t.cells.items()})


def solve_for_cells(
    t: Template,
    constraints: Iterable[tuple[Union[HexCoord, tuple[int, int], str], Rational]],
) -> dict[str, Fraction]:
    """Exact parameter assignment meeting cell-value / magic-sum constraints.

    Each constraint pins one cell (by coordinate) or the magic sum (key
    ``MAGIC_SUM``) to a target rational.  Underdetermined systems zero their
    free parameters, so the result is deterministic.
    """
    constraints = list(constraints)
    matrix, rhs = [], []
    for key, target in constraints:
        if isinstance(key, str):
            if key != MAGIC_SUM:
                raise ValueError(f"unknown constraint key {key!r}")
            form = t.magic_form
        else:
            form = t.cells[HexCoord(*key)]
        matrix.append([form.coefficient(p) for p in t.params])
        rhs.append(Fraction(target) - form.constant)
    try:
        solution = linalg.solve(matrix, rhs)
    except linalg.InconsistentSystemError as exc:
        raise UnsatisfiableConstraintsError(
            tuple(constraints[i] for i in exc.rows)
        ) from None
    return dict(zip(t.params, solution))


def pythagorean_zero_hexagon(x: int, y: int, z: int, d: Rational = 0) -> Hexagon:
    """Zero-sum order-3 hexagon from a Pythagorean triple x^2 + y^2 = z^2.

    Instantiates the order-3 template at a = y^2, b = x^2, c = -z^2, so the
    magic sum 2(a+b+c) collapses to zero and the entries are built from
    squares; ``d`` is the template's free parameter.
    """
    if not all(isinstance(v, int) and v > 0 for v in (x, y, z)):
        raise ValueError("expected positive integers x, y, z")
    if x * x + y * y != z * z:
        raise ValueError(f"({x}, {y}, {z}) is not a Pythagorean triple")
    assignment = {"a": y * y, "b": x * x, "c": -z * z, "d": Fraction(d)}
    return instantiate(builtin_template(3), assignment)


def synthesize_template(n: int) -> Template:
    """Template with parameters m, k1..kN realizing every magic sum at order n.

    Sets up the 3(2n-1) line-sum equations over the cell values, solves for a
    particular solution whose line sums are all 1 (scaled by the parameter m)
    and an integral basis of the all-lines-zero null space (one parameter per
    basis vector).  Every assignment yields a magic hexagon with M = m, and
    for n >= 2 the null space is nontrivial, so each magic sum is hit by
    infinitely many hexagons.
    """
    coords = grid_coords(n)
    index = {c: i for i, c in enumerate(coords)}
    matrix = []
    for line in line_set(n).lines:
        row = [Fraction(0)] * len(coords)
        for c in line:
            row[index[c]] = Fraction(1)
        matrix.append(row)
    ones = [Fraction(1)] * len(matrix)
    particular = linalg.solve(matrix, ones)
    basis = linalg.nullspace(matrix)
    if n >= 2 and len(basis) < 1:
        raise InvalidTemplateError(f"order {n} line system has no free direction")
    params = ["m"] + [f"k{j}" for j in range(1, len(basis) + 1)]
    cells = {}
    for i, c in enumerate(coords):
        coeffs = {"m": particular[i]}
        for j, vec in enumerate(basis, start=1):
            coeffs[f"k{j}"] = vec[i]
        cells[c] = LinearForm(0, coeffs)
    return Template(n, tuple(params), cells, LinearForm.parameter("m"))


TEMPLATE_HEADER = "hexmagic-template v1"

BUILTIN_VARIANTS = {
    3: ("order3",),
    4: ("order4",),
    5: ("order5",),
    6: ("order6",),
    7: ("order7-diagonal", "order7-seven"),
}


def builtin_template(order: int, variant: str | None = None) -> Template:
    """A bundled parametric hexagon for orders 3..7.

    Order 7 ships two: ``diagonal`` (magic form ``z``) and ``seven`` (magic
    form ``t+u+v+w+x+y+z``).  Loading re-validates line-sum uniformity, so a
    corrupted data file cannot produce a non-magic template.
    """
    if order not in BUILTIN_VARIANTS:
        raise ValueError(f"no builtin template for order {order} (have 3..7)")
    names = BUILTIN_VARIANTS[order]
    if variant is None:
        name = names[0]
    else:
        name = variant if variant in names else f"order{order}-{variant}"
        if name not in names:
            raise ValueError(f"unknown variant {variant!r} for order {order}")
    from . import corpus

    return corpus.load_template(name)


def render_template(t: Template) -> str:
    """Serialize to the ``hexmagic-template v1`` format."""
    out = [TEMPLATE_HEADER, f"order: {t.order}", "params: " + " ".join(t.params)]
    coords = iter(grid_coords(t.order))
    for length in row_lengths(t.order):
        row = [format_form(t.cells[next(coords)]) for _ in range(length)]
        out.append(" ".join(row))
    out.append(f"magic: {format_form(t.magic_form)}")
    return "\n".join(out) + "\n"


def parse_template(text: str) -> Template:
    """Parse and validate the template format (rejects non-magic cell data)."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines or lines[0] != TEMPLATE_HEADER:
        raise InvalidTemplateError(f"missing {TEMPLATE_HEADER!r} header")
    if len(lines) < 3 or not lines[1].startswith("order:") or not lines[2].startswith("params:"):
        raise InvalidTemplateError("expected 'order:' then 'params:' lines")
    try:
        order = int(lines[1][len("order:") :].strip())
    except ValueError:
        raise InvalidTemplateError(f"bad order line {lines[1]!r}") from None
    if order < 1:
        raise InvalidTemplateError(f"order must be positive, got {order}")
    params = tuple(lines[2][len("params:") :].split())
    body = lines[3:]
    expected = row_lengths(order)
    if len(body) != len(expected) + 1 or not body[-1].startswith("magic:"):
        raise InvalidTemplateError(
            f"expected {len(expected)} cell rows plus a 'magic:' trailer"
        )
    declared_magic = parse_form(body[-1][len("magic:") :].strip())
    cells = {}
    coords = iter(grid_coords(order))
    for i, ln in enumerate(body[:-1]):
        tokens = ln.split()
        if len(tokens) != expected[i]:
            raise InvalidTemplateError(
                f"row {i} must have {expected[i]} cells, got {len(tokens)}"
            )
        for tok in tokens:
            cells[next(coords)] = parse_form(tok)
    return Template(order, params, cells, declared_magic)


def read_template(path) -> Template:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_template(fh.read())


def write_template(t: Template, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(render_template(t))
