"""Linear combinations of hexagons, stored derivation recipes, and products.

Magic hexagons of one order form a rational vector space slice: combining
magic inputs with rational coefficients is magic again, with the combined
magic sum.  Recipes store such derivations as data.  The multiplicative
transform reinterprets an additive template's integer coefficients as
exponents, giving hexagons whose line *products* agree.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional, Sequence, Union

from .grid import Hexagon, grid_coords, line_set, read_hexagon
from .templates import Template, instantiate

Rational = Union[int, Fraction, str]


class RecipeError(ValueError):
    """Raised for malformed recipe files or failed expect-magic cross-checks."""


@dataclass(frozen=True)
class Combination:
    """Rational multiples of hexagons sharing one order."""

    terms: tuple[tuple[Fraction, Hexagon], ...]

    def __post_init__(self):
        orders = {h.order for _, h in self.terms}
        if len(orders) > 1:
            raise ValueError(f"mixed orders in combination: {sorted(orders)}")
        if not self.terms:
            raise ValueError("empty combination")


def combine(
    terms: Union[Combination, Sequence[tuple[Rational, Hexagon]]]
) -> Hexagon:
    """Cell-wise sum of coefficient * hexagon over all terms.

    If every input is magic, the output is magic with the correspondingly
    combined magic sum; this is checked by callers, not here.
    """
    if not isinstance(terms, Combination):
        terms = Combination(tuple((Fraction(c), h) for c, h in terms))
    order = terms.terms[0][1].order
    acc = [Fraction(0)] * len(grid_coords(order))
    for coef, h in terms.terms:
        for i, v in enumerate(h.values()):
            acc[i] += coef * v
    return Hexagon.from_values(order, acc)


@dataclass(frozen=True)
class Recipe:
    """A stored combination: coefficients paired with hexagon file names."""

    terms: tuple[tuple[Fraction, str], ...]
    expect_magic: Optional[Fraction]


RECIPE_HEADER = "hexmagic-recipe v1"


def parse_recipe(text: str) -> Recipe:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines or lines[0] != RECIPE_HEADER:
        raise RecipeError(f"missing {RECIPE_HEADER!r} header")
    terms = []
    expect: Optional[Fraction] = None
    for ln in lines[1:]:
        if ln.startswith("term:"):
            parts = ln[len("term:") :].split()
            if len(parts) != 2:
                raise RecipeError(f"bad term line {ln!r}")
            try:
                coef = Fraction(parts[0])
            except ValueError:
                raise RecipeError(f"bad coefficient {parts[0]!r}") from None
            terms.append((coef, parts[1]))
        elif ln.startswith("expect-magic:"):
            expect = Fraction(ln[len("expect-magic:") :].strip())
        else:
            raise RecipeError(f"unrecognized recipe line {ln!r}")
    if not terms:
        raise RecipeError("recipe has no terms")
    return Recipe(tuple(terms), expect)


def run_recipe(path) -> Hexagon:
    """Execute a recipe file; term file names resolve relative to the recipe.

    The optional ``expect-magic`` trailer is enforced: a mismatch means some
    input file is wrong, and raises rather than returning bad data.
    """
    with open(path, "r", encoding="utf-8") as fh:
        recipe = parse_recipe(fh.read())
    base = os.path.dirname(os.fspath(path))
    hexes = []
    for coef, name in recipe.terms:
        target = os.path.join(base, name)
        if not os.path.exists(target):
            raise RecipeError(f"recipe input not found: {target}")
        hexes.append((coef, read_hexagon(target)))
    result = combine(hexes)
    if recipe.expect_magic is not None:
        from .verify import verify

        report = verify(result)
        if report.magic_sum != recipe.expect_magic:
            raise RecipeError(
                f"recipe {path} expected magic sum {recipe.expect_magic}, "
                f"got {report.magic_sum}"
            )
    return result


def derive_corpus_hexagon(recipe_id: str) -> Hexagon:
    """Run one of the bundled derivation recipes by id (e.g. ``fig9-rhs``)."""
    from . import corpus

    return run_recipe(corpus.recipe_path(recipe_id))


class ZeroCellError(ValueError):
    """Raised when a product runs into a zero cell or parameter."""


def to_multiplicative(t: Template, assignment: Mapping[str, Rational]) -> Hexagon:
    """Map an additive template to a multiplicative hexagon.

    Each cell form sum(c_p * p) becomes the product of value(p) ** c_p, so
    line sums turn into line products and the magic form's value becomes the
    magic product.  Requires integer coefficients, zero constant terms, and
    nonzero parameter values.
    """
    values = {k: Fraction(v) for k, v in assignment.items()}
    for name, v in values.items():
        if v == 0:
            raise ZeroCellError(f"parameter {name} must be nonzero")
    cells = {}
    for coord, form in t.cells.items():
        if form.constant:
            raise ValueError(
                f"cell {coord} has constant term {form.constant}; only pure "
                "parameter forms have a multiplicative counterpart"
            )
        prod = Fraction(1)
        for name, coef in form:
            if coef.denominator != 1:
                raise ValueError(
                    f"cell {coord} coefficient {coef} is not an integer exponent"
                )
            if name not in values:
                raise KeyError(f"no value assigned to parameter {name!r}")
            prod *= values[name] ** int(coef)
        cells[coord] = prod
    return Hexagon(t.order, cells)


def magic_product(h: Hexagon) -> Optional[Fraction]:
    """The common line product, or None if the lines disagree.

    Cells must be nonzero (a zero cell makes the notion degenerate).
    """
    vals = h.cells
    if any(v == 0 for v in h.values()):
        raise ZeroCellError("hexagon has a zero cell; line products degenerate")
    products = []
    for line in line_set(h.order).lines:
        p = Fraction(1)
        for c in line:
            p *= vals[c]
        products.append(p)
    return products[0] if len(set(products)) == 1 else None


def multiplicative_magic_product(
    t: Template, assignment: Mapping[str, Rational]
) -> Fraction:
    """The product predicted by the magic form under the exponent map."""
    values = {k: Fraction(v) for k, v in assignment.items()}
    p = Fraction(1)
    for name, coef in t.magic_form:
        p *= values[name] ** int(coef)
    return p
