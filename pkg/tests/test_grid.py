import math

import numpy as np
import pytest

import bgk1d as b
from bgk1d.errors import ConfigError


class TestBuildGrid:
    def test_paper_grid_spacings(self):
        g = b.build_grid(-1.25, 1.25, -7, 7, 256, 128)
        assert g.dx == 2.5 / 256
        assert g.dv == 14.0 / 128
        assert g.dv == 0.109375
        assert g.v_max_abs == 7.0

    def test_midpoint_centers(self):
        g = b.build_grid(0, 1, -1, 1, 10, 4)
        assert np.allclose(g.x_centers, [0.05, 0.15, 0.25, 0.35, 0.45,
                                         0.55, 0.65, 0.75, 0.85, 0.95],
                           rtol=0, atol=1e-15)
        assert np.array_equal(g.v_centers, [-0.75, -0.25, 0.25, 0.75])

    def test_asymmetric_v_max(self):
        g = b.build_grid(0, 1, -2, 1, 8, 3)
        assert g.v_max_abs == 2.0

    def test_domain_order_rejected(self):
        with pytest.raises(ConfigError):
            b.build_grid(1, 0, -1, 1, 10, 4)
        with pytest.raises(ConfigError):
            b.build_grid(0, 1, 1, -1, 10, 4)

    def test_stencil_too_small(self):
        with pytest.raises(ConfigError, match="n_x"):
            b.build_grid(0, 1, -1, 1, 4, 4)
        with pytest.raises(ConfigError):
            b.build_grid(0, 1, -1, 1, 10, 2)

    def test_symmetric_velocity_centers(self):
        g = b.build_grid(0, 1, -7, 7, 8, 128)
        assert np.array_equal(g.v_centers, -g.v_centers[::-1])
        assert not np.any(g.v_centers == 0.0)

    def test_deterministic_construction(self):
        g1 = b.build_grid(-1.25, 1.25, -7, 7, 256, 128)
        g2 = b.build_grid(-1.25, 1.25, -7, 7, 256, 128)
        assert np.array_equal(g1.x_centers, g2.x_centers)
        assert np.array_equal(g1.v_centers, g2.v_centers)
        assert g1.dx == g2.dx and g1.dv == g2.dv


class TestRunConfig:
    def _ic(self):
        return b.InitialCondition(0.5, b.MaxwellianState(1, 0, 1),
                                  b.MaxwellianState(1, 0, 1))

    def test_epsilon_must_be_positive(self):
        with pytest.raises(ConfigError):
            b.RunConfig(epsilon=0.0, cfl=1.0, final_time=1.0, ic=self._ic())

    def test_cfl_bounds(self):
        with pytest.raises(ConfigError):
            b.RunConfig(epsilon=0.01, cfl=2.5, final_time=1.0, ic=self._ic())
        with pytest.raises(ConfigError):
            b.RunConfig(epsilon=0.01, cfl=0.0, final_time=1.0, ic=self._ic())
        with pytest.warns(UserWarning):
            b.RunConfig(epsilon=0.01, cfl=1.9999, final_time=1.0, ic=self._ic())

    def test_state_positivity(self):
        with pytest.raises(ConfigError):
            b.MaxwellianState(0.0, 0.0, 1.0)
        with pytest.raises(ConfigError):
            b.MaxwellianState(1.0, 0.0, -1.0)


class TestSampleInitialCondition:
    def test_uniform_state_is_x_independent(self):
        g = b.build_grid(-1, 1, -5, 5, 10, 16)
        ic = b.InitialCondition(0.5, b.MaxwellianState(1, 0, 1),
                                b.MaxwellianState(1, 0, 1))
        f = b.sample_initial_condition(g, ic)
        expected = np.exp(-0.5 * g.v_centers**2) / math.sqrt(2 * math.pi)
        assert np.allclose(f.values, np.tile(expected, (10, 1)), rtol=1e-15)
        # x-independence is exact: every row identical bitwise
        assert np.array_equal(f.values, np.tile(f.values[0], (10, 1)))

    def test_inner_state_peak_value(self, paper_grid, paper_ic):
        # near x = 0, v near u = 0.25 the PDF sits at the Gaussian peak
        f = b.sample_initial_condition(paper_grid, paper_ic)
        i = int(np.argmin(np.abs(paper_grid.x_centers)))
        j = int(np.argmin(np.abs(paper_grid.v_centers - 0.25)))
        vj = paper_grid.v_centers[j]
        exact = math.exp(-0.5 * (vj - 0.25) ** 2) / math.sqrt(2 * math.pi)
        assert f.values[i, j] == exact
        assert f.values[i, j] == pytest.approx(1 / math.sqrt(2 * math.pi), abs=1e-3)

    def test_boundary_cell_takes_outer_state(self):
        # centers at +-0.375 land exactly on the discontinuity: outer wins
        g = b.build_grid(-1, 1, -3, 3, 8, 8)
        assert 0.375 in np.abs(g.x_centers)
        ic = b.InitialCondition(0.375, b.MaxwellianState(1, 0, 1),
                                b.MaxwellianState(0.5, 0, 1))
        f = b.sample_initial_condition(g, ic)
        on_edge = np.isclose(np.abs(g.x_centers), 0.375)
        outer = np.exp(-0.5 * g.v_centers**2) / math.sqrt(2 * math.pi) * 0.5
        for i in np.flatnonzero(on_edge):
            assert np.array_equal(f.values[i], outer)

    def test_all_values_positive_finite(self, paper_grid, paper_ic):
        f = b.sample_initial_condition(paper_grid, paper_ic)
        assert np.all(f.values > 0)
        assert np.all(np.isfinite(f.values))
