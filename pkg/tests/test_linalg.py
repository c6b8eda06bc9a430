"""Exact elimination tests, cross-checked against sympy."""

import random
from fractions import Fraction

import pytest
import sympy

from hexmagic import linalg
from hexmagic.grid import grid_coords, line_set


F = Fraction  # noqa: N816


class TestSolve:
    def test_unique_system(self):
        a = [[F(1), F(1)], [F(1), F(-1)]]
        assert linalg.solve(a, [F(3), F(1)]) == [2, 1]

    def test_free_variables_zeroed(self):
        a = [[F(1), F(1), F(1)]]
        assert linalg.solve(a, [F(5)]) == [5, 0, 0]

    def test_inconsistent_reports_culprits(self):
        a = [[F(1), F(1)], [F(0), F(1)], [F(1), F(2)]]
        with pytest.raises(linalg.InconsistentSystemError) as err:
            linalg.solve(a, [F(0), F(0), F(1)])
        assert set(err.value.rows) == {0, 1, 2}

    def test_contradiction_pair(self):
        a = [[F(1), F(1)], [F(1), F(1)]]
        with pytest.raises(linalg.InconsistentSystemError) as err:
            linalg.solve(a, [F(0), F(1)])
        assert set(err.value.rows) == {0, 1}

    def test_exactness_with_fractions(self):
        a = [[F(1, 3), F(1, 7)], [F(2, 5), F(-1, 2)]]
        x = linalg.solve(a, [F(1), F(0)])
        assert a[0][0] * x[0] + a[0][1] * x[1] == 1
        assert a[1][0] * x[0] + a[1][1] * x[1] == 0


class TestNullspace:
    def test_simple_kernel(self):
        basis = linalg.nullspace([[F(1), F(1), F(1)]])
        assert len(basis) == 2
        for vec in basis:
            assert sum(vec) == 0
            assert next(v for v in vec if v) > 0

    def test_vectors_are_integral_and_primitive(self):
        a = [[F(1, 2), F(1, 3), F(1, 5)]]
        from math import gcd
        for vec in linalg.nullspace(a):
            g = 0
            for v in vec:
                assert isinstance(v, int)
                g = gcd(g, v)
            assert g == 1
            assert sum(F(c) * v for c, v in zip(a[0], vec)) == 0

    @pytest.mark.parametrize("seed", range(5))
    def test_against_sympy_on_random_matrices(self, seed):
        rng = random.Random(seed)
        rows, cols = rng.randint(2, 5), rng.randint(2, 6)
        a = [[F(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(cols)]
             for _ in range(rows)]
        m = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in row]
                          for row in a])
        assert linalg.rank(a) == m.rank()
        basis = linalg.nullspace(a)
        assert len(basis) == cols - m.rank()
        for vec in basis:
            for row in a:
                assert sum(c * v for c, v in zip(row, vec)) == 0

    def test_line_system_rank_matches_sympy(self):
        # the magic-hexagon homogeneous system itself, cross-checked exactly
        for order in (2, 3, 4):
            coords = grid_coords(order)
            index = {c: i for i, c in enumerate(coords)}
            a = []
            for line in line_set(order).lines:
                row = [F(0)] * len(coords)
                for c in line:
                    row[index[c]] = F(1)
                a.append(row)
            m = sympy.Matrix([[int(x) for x in row] for row in a])
            assert linalg.rank(a) == m.rank()
            assert len(linalg.nullspace(a)) == len(coords) - m.rank()
