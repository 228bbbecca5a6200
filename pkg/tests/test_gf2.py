from __future__ import annotations

import pytest

from linca2d.errors import DimensionError, ParseError
from linca2d.gf2 import Gf2Matrix, parse_matrix, serialize_matrix
from linca2d.grid import BitVector, flatten, random_grid

from reference import ref_rank

# corpus matrices on a 2x2 grid (dim 4)
M1_2x2 = Gf2Matrix.identity(4)
M2_2x2 = Gf2Matrix.from_entries([[0, 1, 0, 0], [0, 0, 0, 0],
                                 [0, 0, 0, 1], [0, 0, 0, 0]])
M4_2x2 = Gf2Matrix.from_entries([[0, 0, 0, 1], [0, 0, 0, 0],
                                 [0, 0, 0, 0], [0, 0, 0, 0]])
M7_2x2 = Gf2Matrix.from_entries([[1, 1, 0, 1], [0, 1, 0, 0],
                                 [0, 0, 1, 1], [0, 0, 0, 1]])

# right-shift and left-shift matrices on a 2x3 grid (dim 6), transposes
M2_2x3 = Gf2Matrix.from_coords(6, [(0, 1), (1, 2), (3, 4), (4, 5)])
M32_2x3 = Gf2Matrix.from_coords(6, [(1, 0), (2, 1), (4, 3), (5, 4)])


def random_matrix(dim: int, seed: int) -> Gf2Matrix:
    return Gf2Matrix(dim, random_grid(dim, dim, seed).rows)


class TestXor:
    def test_join_of_three_fundamentals(self):
        assert M1_2x2 ^ M2_2x2 ^ M4_2x2 == M7_2x2

    def test_self_cancels(self):
        a = random_matrix(9, 3)
        assert a ^ a == Gf2Matrix.zero(9)

    def test_zero_is_neutral(self):
        a = random_matrix(9, 4)
        assert a ^ Gf2Matrix.zero(9) == a

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionError):
            M1_2x2 ^ M2_2x3

    @pytest.mark.parametrize("dim", [1, 2, 7, 36])
    def test_abelian_group_of_exponent_two(self, dim):
        a = random_matrix(dim, dim)
        b = random_matrix(dim, dim + 1)
        c = random_matrix(dim, dim + 2)
        assert a ^ b == b ^ a
        assert (a ^ b) ^ c == a ^ (b ^ c)
        assert a ^ a == Gf2Matrix.zero(dim)


class TestTranspose:
    def test_printed_pair(self):
        assert M2_2x3.transpose() == M32_2x3

    def test_identity(self):
        eye = Gf2Matrix.identity(5)
        assert eye.transpose() == eye

    @pytest.mark.parametrize("dim", [1, 3, 17, 36])
    def test_involution(self, dim):
        a = random_matrix(dim, dim * 7)
        assert a.transpose().transpose() == a

    @pytest.mark.parametrize("dim", [2, 5, 36])
    def test_distributes_over_xor(self, dim):
        a = random_matrix(dim, dim)
        b = random_matrix(dim, dim + 9)
        assert (a ^ b).transpose() == a.transpose() ^ b.transpose()


class TestMatvec:
    def test_zero_vector(self):
        a = random_matrix(8, 2)
        assert a.matvec(BitVector(8, 0)) == BitVector(8, 0)

    def test_identity(self):
        v = flatten(random_grid(1, 9, 5))
        assert Gf2Matrix.identity(9).matvec(v) == v

    def test_length_mismatch(self):
        with pytest.raises(DimensionError):
            M1_2x2.matvec(BitVector.from_bits([1, 0]))

    @pytest.mark.parametrize("dim", [2, 9, 36])
    def test_linearity(self, dim):
        a = random_matrix(dim, dim)
        u = flatten(random_grid(1, dim, dim + 1))
        v = flatten(random_grid(1, dim, dim + 2))
        assert a.matvec(u ^ v) == a.matvec(u) ^ a.matvec(v)


class TestMatpow:
    def test_power_zero_is_identity(self):
        a = random_matrix(6, 11)
        assert a.matpow(0) == Gf2Matrix.identity(6)

    def test_power_one(self):
        a = random_matrix(6, 12)
        assert a.matpow(1) == a

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            M1_2x2.matpow(-1)

    @pytest.mark.parametrize("s,t", [(0, 3), (1, 1), (2, 3), (4, 5)])
    def test_power_addition(self, s, t):
        a = random_matrix(7, 13)
        v = flatten(random_grid(1, 7, 14))
        left = a.matpow(s + t).matvec(v)
        right = a.matpow(s).matvec(a.matpow(t).matvec(v))
        assert left == right

    def test_matmul_against_entry_definition(self):
        a = random_matrix(5, 21)
        b = random_matrix(5, 22)
        c = a.matmul(b)
        for i in range(5):
            for j in range(5):
                expected = 0
                for k in range(5):
                    expected ^= a.entry(i, k) & b.entry(k, j)
                assert c.entry(i, j) == expected


class TestRank:
    def test_identity(self):
        assert Gf2Matrix.identity(6).rank() == 6

    def test_zero(self):
        assert Gf2Matrix.zero(6).rank() == 0

    @pytest.mark.parametrize("dim", [1, 2, 5, 9, 16])
    def test_against_reference_elimination(self, dim):
        for seed in range(4):
            a = random_matrix(dim, 31 * dim + seed)
            entries = [[a.entry(i, j) for j in range(dim)] for i in range(dim)]
            assert a.rank() == ref_rank(entries)

    @pytest.mark.parametrize("dim", [3, 8, 20])
    def test_transpose_invariant(self, dim):
        a = random_matrix(dim, dim * 5)
        assert a.rank() == a.transpose().rank()

    def test_invertible(self):
        assert Gf2Matrix.identity(4).is_invertible()
        assert not Gf2Matrix.zero(4).is_invertible()


class TestPopcount:
    def test_all_ones(self):
        assert Gf2Matrix.from_entries([[1] * 4 for _ in range(4)]).popcount() == 16

    def test_zero(self):
        assert Gf2Matrix.zero(6).popcount() == 0

    def test_identity_2x3_grid(self):
        assert Gf2Matrix.identity(6).popcount() == 6


class TestCoords:
    def test_to_coords_sorted(self):
        coords = M2_2x3.to_coords()
        assert coords == sorted(coords)
        assert coords == [(0, 1), (1, 2), (3, 4), (4, 5)]

    def test_from_coords_roundtrip(self):
        a = random_matrix(9, 77)
        assert Gf2Matrix.from_coords(9, a.to_coords()) == a

    def test_out_of_range(self):
        with pytest.raises(DimensionError):
            Gf2Matrix.from_coords(2, [(0, 2)])

    def test_entry(self):
        assert M2_2x3.entry(0, 1) == 1
        assert M2_2x3.entry(1, 0) == 0
        with pytest.raises(IndexError):
            M2_2x3.entry(6, 0)


class TestTextFormat:
    def test_dense_with_rule_header(self):
        text = serialize_matrix(M2_2x2, "dense", rule=2, grid_dims=(2, 2))
        assert text == "# rule 2 rows 2 cols 2 dim 4\n0100\n0000\n0001\n0000\n"
        mat, header = parse_matrix(text)
        assert mat == M2_2x2
        assert (header.rule, header.grid_rows, header.grid_cols) == (2, 2, 2)

    def test_coords_with_dim_header(self):
        text = serialize_matrix(M4_2x2, "coords")
        assert text == "# dim 4\n0 3\n"
        mat, header = parse_matrix(text)
        assert mat == M4_2x2
        assert header.rule is None and header.dim == 4

    def test_zero_matrix_coords(self):
        text = serialize_matrix(Gf2Matrix.zero(3), "coords")
        assert text == "# dim 3\n"
        mat, _ = parse_matrix(text)
        assert mat == Gf2Matrix.zero(3)

    @pytest.mark.parametrize("fmt", ["dense", "coords"])
    @pytest.mark.parametrize("dim", [1, 4, 12])
    def test_roundtrip_random(self, fmt, dim):
        a = random_matrix(dim, dim * 3 + 1)
        mat, _ = parse_matrix(serialize_matrix(a, fmt))
        assert mat == a

    def test_unknown_format(self):
        with pytest.raises(ValueError):
            serialize_matrix(M1_2x2, "sparse")

    def test_bad_header(self):
        with pytest.raises(ParseError):
            parse_matrix("rule 1\n1\n")

    def test_header_dim_conflict(self):
        with pytest.raises(ParseError):
            parse_matrix("# rule 1 rows 2 cols 2 dim 5\n")

    def test_wrong_dense_row_count(self):
        with pytest.raises(ParseError):
            parse_matrix("# dim 3\n000\n000\n")

    def test_bad_dense_row(self):
        with pytest.raises(ParseError) as exc:
            parse_matrix("# dim 2\n01\n0x\n")
        assert exc.value.line == 3

    def test_bad_coordinate(self):
        with pytest.raises(ParseError):
            parse_matrix("# dim 2\n0 9\n")

    def test_duplicate_coordinate(self):
        with pytest.raises(ParseError):
            parse_matrix("# dim 2\n0 1\n0 1\n")

    def test_empty_text(self):
        with pytest.raises(ParseError):
            parse_matrix("")


class TestConstruction:
    def test_from_entries_rejects_non_square(self):
        with pytest.raises(DimensionError):
            Gf2Matrix.from_entries([[0, 1], [1]])

    def test_from_entries_rejects_bad_values(self):
        with pytest.raises(DimensionError):
            Gf2Matrix.from_entries([[0, 2], [0, 0]])

    def test_row_overflow_rejected(self):
        with pytest.raises(DimensionError):
            Gf2Matrix(2, (1, 4))

    def test_zero_dim_rejected(self):
        with pytest.raises(DimensionError):
            Gf2Matrix.zero(0)
