"""CLI behaviour: exit codes, output contracts, file round-trips."""

from fractions import Fraction

import pytest

from hexmagic import corpus
from hexmagic.cli import main
from hexmagic.grid import parse, read_hexagon, render, write_hexagon
from hexmagic.verify import verify

from test_grid import normal_hexagon


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestVerify:
    def test_magic_file_exits_zero(self, capsys):
        code, out, _ = run(capsys, "verify", str(corpus.hexagon_path("fig14-left")))
        assert code == 0
        assert "M=546" in out
        assert "21 .. 119" in out

    def test_order7_abnormal(self, capsys):
        code, out, _ = run(capsys, "verify", str(corpus.hexagon_path("fig16")))
        assert code == 0
        assert "M=635" in out

    def test_normal_flagged(self, capsys):
        code, out, _ = run(capsys, "verify", str(corpus.hexagon_path("fig1-left")))
        assert code == 0
        assert "(normal)" in out

    def test_perturbed_cell_exits_one_and_shows_sums(self, capsys, tmp_path):
        h = normal_hexagon()
        cells = h.cells
        cells[(0, 0)] += 1
        bad = tmp_path / "bad.hex"
        from hexmagic.grid import Hexagon
        write_hexagon(Hexagon(3, cells), bad)
        code, out, _ = run(capsys, "verify", str(bad))
        assert code == 1
        assert "not magic" in out
        assert "38" in out and "39" in out  # both offending sums visible

    def test_unparsable_exits_two(self, capsys, tmp_path):
        bad = tmp_path / "junk.hex"
        bad.write_text("not a hexagon\n")
        code, _, err = run(capsys, "verify", str(bad))
        assert code == 2
        assert "error" in err

    def test_missing_file_exits_two(self, capsys):
        code, _, err = run(capsys, "verify", "/nonexistent.hex")
        assert code == 2


class TestGen:
    def test_order4_known_case(self, capsys, tmp_path):
        out_file = tmp_path / "m111.hex"
        code, out, _ = run(capsys, "gen", "--order", "4", "-o", str(out_file),
                           "a=44", "b=0", "c=29", "d=-14", "e=37")
        assert code == 0
        assert "M = 111" in out
        report = verify(read_hexagon(out_file))
        assert report.is_magic and report.magic_sum == 111

    def test_synthesized_any_sum(self, capsys, tmp_path):
        out_file = tmp_path / "m546.hex"
        code, out, _ = run(capsys, "gen", "--order", "6", "--synthesized",
                           "-o", str(out_file), "m=546")
        assert code == 0
        assert "M = 546" in out
        assert verify(read_hexagon(out_file)).magic_sum == 546

    def test_constraint_solve(self, capsys):
        code, out, _ = run(capsys, "gen", "--order", "3", "--constraint", "M=0")
        assert code == 0
        assert "M = 0" in out
        h = parse(out[out.index("hexmagic v1"):])
        assert verify(h).magic_sum == 0

    def test_stdout_round_trips(self, capsys):
        code, out, _ = run(capsys, "gen", "--order", "3", "a=1", "b=2", "c=3", "d=4")
        assert code == 0
        h = parse(out[out.index("hexmagic v1"):])
        assert verify(h).magic_sum == 12

    def test_unknown_parameter_exits_two(self, capsys):
        code, _, err = run(capsys, "gen", "--order", "3", "zz=1")
        assert code == 2

    def test_unsolvable_constraints_exit_two(self, capsys):
        code, _, err = run(capsys, "gen", "--order", "3",
                           "--constraint", "0,0=1", "--constraint", "0,0=2")
        assert code == 2
        assert "inconsistent" in err


class TestCombine:
    def test_bundled_recipe_by_id(self, capsys):
        code, out, _ = run(capsys, "combine", "fig9-rhs")
        assert code == 0
        assert "M = 9" in out

    def test_recipe_by_path_writes_file(self, capsys, tmp_path):
        out_file = tmp_path / "out.hex"
        code, out, _ = run(capsys, "combine",
                           str(corpus.recipe_path("fig10-m30")),
                           "-o", str(out_file))
        assert code == 0
        assert "M = 30" in out
        assert verify(read_hexagon(out_file)).magic_sum == 30

    def test_identity_recipe_bit_identical(self, capsys, tmp_path):
        src = corpus.hexagon_path("fig1-left")
        recipe = tmp_path / "id.recipe"
        recipe.write_text(f"hexmagic-recipe v1\nterm: 1 {src}\n")
        out_file = tmp_path / "copy.hex"
        code, _, _ = run(capsys, "combine", str(recipe), "-o", str(out_file))
        assert code == 0
        assert out_file.read_text() == render(read_hexagon(src))

    def test_bad_recipe_exits_two(self, capsys, tmp_path):
        r = tmp_path / "broken.recipe"
        r.write_text("hexmagic-recipe v1\nterm: 1 missing.hex\n")
        code, _, err = run(capsys, "combine", str(r))
        assert code == 2


class TestSearch:
    def test_order2_normal_infeasible_message(self, capsys, tmp_path):
        code, out, _ = run(capsys, "search", "--order", "2", "--normal",
                           "--out-dir", str(tmp_path))
        assert code == 2
        assert "infeasible" in out

    def test_small_search_writes_solutions(self, capsys, tmp_path):
        code, out, _ = run(capsys, "search", "--order", "2",
                           "--entries", "-3..3", "--sum", "0",
                           "--out-dir", str(tmp_path / "sols"))
        assert code == 0
        assert out.strip().splitlines()[-1] == "solutions: 0 labeled: 0 nodes: 43"

    def test_written_solutions_reverify(self, capsys, tmp_path):
        code, out, _ = run(capsys, "search", "--order", "1",
                           "--entries", "5..5", "--sum", "5",
                           "--out-dir", str(tmp_path / "sols"))
        assert code == 0
        assert "solutions: 1 labeled: 1" in out
        written = sorted((tmp_path / "sols").glob("*.hex"))
        assert len(written) == 1
        assert verify(read_hexagon(written[0])).magic_sum == 5


class TestMult:
    def test_product_four(self, capsys, tmp_path):
        out_file = tmp_path / "p4.hex"
        code, out, _ = run(capsys, "mult", "--order", "4",
                           "a=1", "b=2", "c=1", "d=1", "e=1",
                           "-o", str(out_file))
        assert code == 0
        assert "P = 4" in out
        from hexmagic.algebra import magic_product
        assert magic_product(read_hexagon(out_file)) == 4

    def test_all_ones(self, capsys):
        code, out, _ = run(capsys, "mult", "--order", "4",
                           "a=1", "b=1", "c=1", "d=1", "e=1")
        assert code == 0
        assert "P = 1" in out

    def test_zero_value_exits_two(self, capsys):
        code, _, err = run(capsys, "mult", "--order", "4",
                           "a=0", "b=1", "c=1", "d=1", "e=1")
        assert code == 2


class TestCanonRender:
    def test_canon_is_idempotent_via_cli(self, capsys, tmp_path):
        src = corpus.hexagon_path("fig1-left")
        once = tmp_path / "c1.hex"
        twice = tmp_path / "c2.hex"
        assert run(capsys, "canon", str(src), "-o", str(once))[0] == 0
        assert run(capsys, "canon", str(once), "-o", str(twice))[0] == 0
        assert once.read_text() == twice.read_text()

    def test_render_shows_magic_sum(self, capsys):
        code, out, _ = run(capsys, "render", str(corpus.hexagon_path("fig1-left")))
        assert code == 0
        assert "M = 38" in out
        assert "5" in out
