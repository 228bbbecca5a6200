from __future__ import annotations

import pytest

from linca2d.errors import CapacityError, DimensionError, RuleRangeError
from linca2d.gf2 import Gf2Matrix
from linca2d.grid import flatten, random_grid
from linca2d.engine import step
from linca2d.rulematrix import MAX_MATRIX_DIM, build, fundamental_supports_disjoint
from linca2d.rules import FUNDAMENTALS, decompose

from reference import ref_rule_matrix


class TestBuildExamples:
    def test_rule1_is_identity(self):
        assert build(1, 2, 3) == Gf2Matrix.identity(6)

    def test_rule2_on_2x3(self):
        assert build(2, 2, 3).to_coords() == [(0, 1), (1, 2), (3, 4), (4, 5)]

    def test_rule8_on_2x4(self):
        assert build(8, 2, 4).to_coords() == [(i, i + 4) for i in range(4)]

    def test_rule16_on_2x3(self):
        assert build(16, 2, 3).to_coords() == [(1, 3), (2, 4)]

    def test_rule354_on_2x2(self):
        rows = ["0100", "1000", "0101", "1010"]
        assert build(354, 2, 2) == Gf2Matrix.from_entries(
            [[int(ch) for ch in row] for row in rows])

    def test_rule105_on_2x2(self):
        rows = ["1010", "1101", "0010", "1011"]
        assert build(105, 2, 2) == Gf2Matrix.from_entries(
            [[int(ch) for ch in row] for row in rows])

    @pytest.mark.parametrize("m,n", [(1, 1), (2, 2), (3, 4), (5, 3)])
    def test_matches_per_cell_reference(self, m, n):
        for rule in (0, 1, 2, 16, 170, 290, 511):
            expected = Gf2Matrix.from_entries(ref_rule_matrix(rule, m, n))
            assert build(rule, m, n) == expected


class TestDecompositionIdentity:
    @pytest.mark.parametrize("m,n", [(2, 2), (3, 4)])
    def test_all_rules(self, m, n):
        fundamentals = {w: build(w, m, n) for w in FUNDAMENTALS}
        for rule in range(512):
            joined = Gf2Matrix.zero(m * n)
            total = 0
            for w in decompose(rule):
                joined ^= fundamentals[w]
                total += fundamentals[w].popcount()
            direct = build(rule, m, n)
            assert direct == joined
            assert direct.popcount() == total


class TestTransposeLaw:
    @pytest.mark.parametrize("m", range(1, 9))
    @pytest.mark.parametrize("n", range(1, 9))
    def test_four_pairs(self, m, n):
        for weight, partner in ((2, 32), (4, 64), (8, 128), (16, 256)):
            assert build(weight, m, n).transpose() == build(partner, m, n)


class TestOracleEquivalence:
    @pytest.mark.parametrize("m,n", [(1, 1), (2, 5), (4, 4), (6, 3)])
    def test_matvec_equals_direct_step(self, m, n):
        for rule in (0, 1, 107, 170, 284, 511):
            mat = build(rule, m, n)
            for seed in range(3):
                g = random_grid(m, n, seed + rule)
                assert mat.matvec(flatten(g)) == flatten(step(g, rule))


class TestRowStructure:
    def test_interior_rows_have_rule_bit_count(self):
        for rule in (1, 7, 170, 341, 511):
            mat = build(rule, 4, 5)
            weight_count = bin(rule).count("1")
            for r in range(1, 3):
                for c in range(1, 4):
                    i = r * 5 + c
                    assert mat.rows[i].bit_count() == weight_count


class TestSupports:
    @pytest.mark.parametrize("m,n", [(1, 1), (2, 2), (3, 4)])
    def test_disjoint(self, m, n):
        assert fundamental_supports_disjoint(m, n)


class TestErrors:
    def test_rule_out_of_range(self):
        with pytest.raises(RuleRangeError):
            build(512, 2, 2)

    def test_bad_dims(self):
        with pytest.raises(DimensionError):
            build(1, 0, 5)

    def test_capacity(self):
        with pytest.raises(CapacityError):
            build(1, 65, 64)
        assert build(0, 64, 64).dim == MAX_MATRIX_DIM
