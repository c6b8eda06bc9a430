"""Grid geometry, symmetry group, and text format tests."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hexmagic.grid import (
    IDENTITY,
    SYMMETRY_GROUP,
    Hexagon,
    HexCoord,
    HexFormatError,
    apply_symmetry,
    canonical_form,
    cell_count,
    grid_coords,
    line_set,
    line_sums,
    parse,
    pretty,
    render,
    row_lengths,
)

# The classic order-3 normal hexagon, used as a concrete fixture throughout.
NORMAL_ROWS = [
    [3, 17, 18],
    [19, 7, 1, 11],
    [16, 2, 5, 6, 9],
    [12, 4, 8, 14],
    [10, 13, 15],
]


def normal_hexagon() -> Hexagon:
    return Hexagon.from_rows(3, NORMAL_ROWS)


rationals = st.fractions(
    min_value=Fraction(-1000), max_value=Fraction(1000), max_denominator=64
)


def hexagons(order):
    return st.lists(
        rationals, min_size=cell_count(order), max_size=cell_count(order)
    ).map(lambda vals: Hexagon.from_values(order, vals))


class TestCellCount:
    def test_known_values(self):
        assert cell_count(1) == 1
        assert cell_count(3) == 19
        assert cell_count(4) == 37

    def test_rejects_bad_order(self):
        with pytest.raises(ValueError):
            cell_count(0)
        with pytest.raises(ValueError):
            cell_count(-2)


class TestLineSet:
    def test_order_1_degenerate(self):
        ls = line_set(1)
        assert len(ls.lines) == 3
        assert all(line == (HexCoord(0, 0),) for line in ls.lines)

    @pytest.mark.parametrize("order,lengths", [
        (3, [3, 4, 5, 4, 3]),
        (4, [4, 5, 6, 7, 6, 5, 4]),
    ])
    def test_lengths_per_direction(self, order, lengths):
        ls = line_set(order)
        assert len(ls.lines) == 3 * (2 * order - 1)
        for group in (ls.rows, ls.q_lines, ls.s_lines):
            assert [len(line) for line in group] == lengths

    @pytest.mark.parametrize("order", range(1, 13))
    def test_each_direction_partitions_cells(self, order):
        all_cells = set(grid_coords(order))
        ls = line_set(order)
        for group in (ls.rows, ls.q_lines, ls.s_lines):
            seen = [c for line in group for c in line]
            assert len(seen) == len(all_cells)
            assert set(seen) == all_cells

    def test_direction_sums_equal_total(self):
        h = normal_hexagon()
        sums = line_sums(h)
        total = sum(h.values())
        k = 2 * h.order - 1
        assert sum(sums[:k]) == sum(sums[k:2 * k]) == sum(sums[2 * k:]) == total


class TestSymmetry:
    def test_identity(self):
        h = normal_hexagon()
        assert apply_symmetry(h, IDENTITY) == h

    def test_rotation_has_order_six(self):
        h = normal_hexagon()
        rot = SYMMETRY_GROUP[1]
        assert rot.rotations == 1 and not rot.reflect
        cur = h
        for _ in range(6):
            cur = apply_symmetry(cur, rot)
        assert cur == h

    def test_group_is_twelve_distinct_permutations(self):
        coords = grid_coords(3)
        perms = {tuple(op.apply(c) for c in coords) for op in SYMMETRY_GROUP}
        assert len(perms) == 12

    def test_composition_closure_and_inverse(self):
        coords = grid_coords(4)
        for a in SYMMETRY_GROUP:
            assert a.compose(a.inverse()) == IDENTITY
            for b in SYMMETRY_GROUP:
                comp = a.compose(b)
                assert comp in SYMMETRY_GROUP
                for c in coords:
                    assert comp.apply(c) == a.apply(b.apply(c))

    @settings(max_examples=30, deadline=None)
    @given(hexagons(3), st.sampled_from(SYMMETRY_GROUP))
    def test_preserves_value_and_line_sum_multisets(self, h, op):
        g = apply_symmetry(h, op)
        assert sorted(g.values()) == sorted(h.values())
        assert sorted(line_sums(g)) == sorted(line_sums(h))


class TestCanonicalForm:
    def test_idempotent(self):
        h = normal_hexagon()
        c = canonical_form(h)
        assert canonical_form(c) == c

    def test_orbit_collapse(self):
        h = normal_hexagon()
        c = canonical_form(h)
        for op in SYMMETRY_GROUP:
            assert canonical_form(apply_symmetry(h, op)) == c

    @settings(max_examples=20, deadline=None)
    @given(hexagons(2), st.sampled_from(SYMMETRY_GROUP))
    def test_random_orbit_collapse(self, h, op):
        assert canonical_form(apply_symmetry(h, op)) == canonical_form(h)


class TestTextFormat:
    def test_render_order_1(self):
        h = Hexagon.from_values(1, [5])
        assert render(h) == "hexmagic v1\norder: 1\nrow: 5\n"

    def test_round_trip_normal(self):
        h = normal_hexagon()
        assert parse(render(h)) == h

    @settings(max_examples=40, deadline=None)
    @given(st.integers(min_value=1, max_value=7).flatmap(hexagons))
    def test_round_trip_random_rationals(self, h):
        assert parse(render(h)) == h

    def test_comments_ignored(self):
        text = "# note\nhexmagic v1\norder: 1\n# more\nrow: -7/3\n"
        assert parse(text) == Hexagon.from_values(1, [Fraction(-7, 3)])

    def test_wrong_row_count_rejected(self):
        text = "hexmagic v1\norder: 3\n" + "row: 1 1 1\n" * 4
        with pytest.raises(HexFormatError):
            parse(text)

    def test_wrong_row_length_rejected(self):
        good = render(normal_hexagon())
        bad = good.replace("row: 3 17 18", "row: 3 17 18 1")
        with pytest.raises(HexFormatError):
            parse(bad)

    @pytest.mark.parametrize("token", ["2/4", "4/2", "1/0", "x", "5/1", "0/5", "1.5"])
    def test_malformed_rationals_rejected(self, token):
        text = f"hexmagic v1\norder: 1\nrow: {token}\n"
        with pytest.raises(HexFormatError):
            parse(text)

    def test_missing_header_rejected(self):
        with pytest.raises(HexFormatError):
            parse("order: 1\nrow: 5\n")

    def test_pretty_is_centred(self):
        out = pretty(normal_hexagon()).splitlines()
        assert len(out) == 5
        assert out[2].startswith("16")


class TestHexagonType:
    def test_cell_access_by_coordinate(self):
        h = normal_hexagon()
        assert h[HexCoord(0, 0)] == 5
        assert h[(0, -2)] == 3

    def test_requires_complete_cover(self):
        cells = {c: 1 for c in grid_coords(2)}
        cells.pop(HexCoord(0, 0))
        with pytest.raises(ValueError):
            Hexagon(2, cells)

    def test_immutable(self):
        h = normal_hexagon()
        with pytest.raises(AttributeError):
            h.order = 5

    def test_row_lengths(self):
        assert row_lengths(4) == (4, 5, 6, 7, 6, 5, 4)
