"""hexmagic: exact construction, verification and enumeration of magic hexagons.

A magic hexagon of order n is a centred hexagonal array whose 3(2n-1) lines
(rows and both diagonal families) share one sum M.  This package works with
exact rationals throughout: verification and normality checks, parametric
(formula-based) templates for orders 3..7, linear-combination derivations,
multiplicative (magic-product) variants, exhaustive symmetry-aware search,
and null-space synthesis producing magic hexagons of any order for any M.
"""

from .algebra import (
    Combination,
    Recipe,
    RecipeError,
    ZeroCellError,
    combine,
    derive_corpus_hexagon,
    magic_product,
    run_recipe,
    to_multiplicative,
)
from .grid import (
    SYMMETRY_GROUP,
    HexCoord,
    Hexagon,
    HexFormatError,
    LineSet,
    SymmetryOp,
    apply_symmetry,
    canonical_form,
    cell_count,
    grid_coords,
    line_set,
    line_sums,
    parse,
    read_hexagon,
    render,
    write_hexagon,
)
from .search import InfeasibleSpecError, SearchResult, SearchSpec, is_extension_feasible
from .templates import (
    MAGIC_SUM,
    InvalidTemplateError,
    LinearForm,
    Template,
    UnsatisfiableConstraintsError,
    builtin_template,
    instantiate,
    parse_template,
    pythagorean_zero_hexagon,
    read_template,
    render_template,
    solve_for_cells,
    synthesize_template,
    template_magic_form,
)
from .verify import (
    VerifyReport,
    entry_multiset,
    normal_existence_scan,
    normal_magic_sum,
    verify,
)

__version__ = "0.1.0"

__all__ = [
    "Combination",
    "HexCoord",
    "HexFormatError",
    "Hexagon",
    "InfeasibleSpecError",
    "InvalidTemplateError",
    "LineSet",
    "LinearForm",
    "MAGIC_SUM",
    "Recipe",
    "RecipeError",
    "SYMMETRY_GROUP",
    "SearchResult",
    "SearchSpec",
    "SymmetryOp",
    "Template",
    "UnsatisfiableConstraintsError",
    "VerifyReport",
    "ZeroCellError",
    "apply_symmetry",
    "builtin_template",
    "canonical_form",
    "cell_count",
    "combine",
    "derive_corpus_hexagon",
    "entry_multiset",
    "grid_coords",
    "instantiate",
    "is_extension_feasible",
    "line_set",
    "line_sums",
    "magic_product",
    "normal_existence_scan",
    "normal_magic_sum",
    "parse",
    "parse_template",
    "pythagorean_zero_hexagon",
    "read_hexagon",
    "read_template",
    "render",
    "render_template",
    "run_recipe",
    "solve_for_cells",
    "synthesize_template",
    "template_magic_form",
    "to_multiplicative",
    "verify",
    "write_hexagon",
]
