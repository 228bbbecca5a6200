from __future__ import annotations

import pytest

from linca2d.engine import evolve, step
from linca2d.errors import RuleRangeError
from linca2d.grid import BitVector, Grid, random_grid, unflatten
from linca2d.rules import decompose

from reference import ref_step

# the 3x4 grid stepped twice under rule 170, from the per-cell reference
SAMPLE_TWO_STEPS = [[0, 0, 0, 1], [0, 0, 1, 1], [1, 1, 1, 0]]


class TestStep:
    def test_worked_example(self, sample_in, sample_out):
        assert step(sample_in, 170) == sample_out

    def test_rule_zero_clears(self):
        g = random_grid(4, 5, 9)
        assert step(g, 0) == Grid.zero(4, 5)

    def test_rule_one_is_identity(self):
        g = random_grid(4, 5, 10)
        assert step(g, 1) == g

    def test_bad_rule(self, sample_in):
        with pytest.raises(RuleRangeError):
            step(sample_in, 512)

    @pytest.mark.parametrize("m,n", [(1, 1), (1, 6), (6, 1), (3, 4), (8, 8)])
    def test_matches_per_cell_reference(self, m, n):
        for seed, rule in [(1, 170), (2, 511), (3, 273), (4, 85), (5, 342)]:
            g = random_grid(m, n, seed * 7 + m + n)
            assert step(g, rule).to_cells() == ref_step(g.to_cells(), rule)

    def test_all_rules_against_reference_at_2x3(self):
        g = random_grid(2, 3, 99)
        cells = g.to_cells()
        for rule in range(512):
            assert step(g, rule).to_cells() == ref_step(cells, rule)


class TestLinearity:
    def test_exhaustive_rules_at_3x3(self):
        for rule in range(512):
            g1 = random_grid(3, 3, 2 * rule)
            g2 = random_grid(3, 3, 2 * rule + 1)
            assert step(g1 ^ g2, rule) == step(g1, rule) ^ step(g2, rule)

    @pytest.mark.parametrize("m,n", [(1, 5), (4, 4), (7, 8), (8, 8)])
    def test_random_sizes(self, m, n):
        for seed in range(10):
            g1 = random_grid(m, n, seed)
            g2 = random_grid(m, n, seed + 1000)
            rule = (seed * 131 + m * 17 + n) % 512
            assert step(g1 ^ g2, rule) == step(g1, rule) ^ step(g2, rule)

    def test_superposition_from_fundamentals(self):
        g = random_grid(5, 6, 42)
        for rule in (0, 1, 7, 170, 300, 511):
            acc = Grid.zero(5, 6)
            for weight in decompose(rule):
                acc ^= step(g, weight)
            assert acc == step(g, rule)


class TestBoundary:
    def test_vertical_rules_clear_single_row(self):
        g = random_grid(1, 8, 5)
        # every fundamental with a vertical offset reads outside a 1xN grid
        for rule in (8, 128, 4, 16, 64, 256, 8 + 128, 4 + 16 + 64 + 256):
            assert step(g, rule) == Grid.zero(1, 8)

    def test_horizontal_rules_clear_single_column(self):
        g = random_grid(8, 1, 6)
        for rule in (2, 32, 2 + 32):
            assert step(g, rule) == Grid.zero(8, 1)

    def test_single_cell_keeps_only_self(self):
        g = Grid.from_cells([[1]])
        for rule in range(512):
            expected = g if rule & 1 else Grid.zero(1, 1)
            assert step(g, rule) == expected


class TestEvolve:
    def test_zero_steps(self, sample_in):
        assert evolve(sample_in, 170, 0) == [sample_in]

    def test_one_step(self, sample_in, sample_out):
        assert evolve(sample_in, 170, 1) == [sample_in, sample_out]

    def test_two_steps_frozen(self, sample_in):
        trajectory = evolve(sample_in, 170, 2)
        assert len(trajectory) == 3
        assert trajectory[-1] == Grid.from_cells(SAMPLE_TWO_STEPS)

    def test_negative_steps(self, sample_in):
        with pytest.raises(ValueError):
            evolve(sample_in, 170, -1)

    def test_each_element_is_one_step(self):
        g = random_grid(4, 4, 17)
        trajectory = evolve(g, 340, 6)
        for earlier, later in zip(trajectory, trajectory[1:]):
            assert step(earlier, 340) == later
