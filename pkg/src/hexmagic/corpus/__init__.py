"""Bundled reference hexagons, templates, and derivation recipes.

Every hexagon file carries an ``# expect-magic:`` comment that is checked on
load, and every template file re-validates its symbolic line sums, so a
corrupted data file is caught at the first touch rather than propagating.
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path

from ..grid import Hexagon, parse
from ..templates import Template, parse_template
from ..verify import verify

_DATA_DIR = Path(__file__).parent


class CorpusError(ValueError):
    """Raised for missing corpus entries or failed expect-magic checks."""


def _path(name: str, suffix: str) -> Path:
    p = _DATA_DIR / f"{name}{suffix}"
    if not p.exists():
        available = sorted(q.stem for q in _DATA_DIR.glob(f"*{suffix}"))
        raise CorpusError(f"no corpus entry {name!r}; available: {available}")
    return p


def hexagon_path(name: str) -> Path:
    return _path(name, ".hex")


def template_path(name: str) -> Path:
    return _path(name, ".template")


def recipe_path(name: str) -> Path:
    return _path(name, ".recipe")


def hexagon_ids() -> list[str]:
    return sorted(p.stem for p in _DATA_DIR.glob("*.hex"))


def template_ids() -> list[str]:
    return sorted(p.stem for p in _DATA_DIR.glob("*.template"))


def recipe_ids() -> list[str]:
    return sorted(p.stem for p in _DATA_DIR.glob("*.recipe"))


def load_hexagon(name: str) -> Hexagon:
    """Load a bundled hexagon, enforcing its expect-magic annotation."""
    text = hexagon_path(name).read_text(encoding="utf-8")
    h = parse(text)
    expected = _expect_magic(text)
    if expected is not None:
        report = verify(h)
        if report.magic_sum != expected:
            raise CorpusError(
                f"corpus hexagon {name!r} expected magic sum {expected}, "
                f"got {report.magic_sum}"
            )
    return h


def load_template(name: str) -> Template:
    return parse_template(template_path(name).read_text(encoding="utf-8"))


def _expect_magic(text: str) -> Fraction | None:
    for line in text.splitlines():
        line = line.strip()
        if line.startswith("#") and "expect-magic:" in line:
            return Fraction(line.split("expect-magic:", 1)[1].strip())
    return None
