import numpy as np
import pytest
from hypothesis import given, strategies as st

import bgk1d as b
from bgk1d.correction import build_correction, eval_modified_maxwellian

from conftest import perturbed_maxwellian


class TestCollisionTheta:
    def test_direct_formula_value(self):
        # 0.1 * 0.22 / (0.13 * 0.14); note theta > 1 is legitimate here
        theta = b.collision_theta(0.1, 0.01)
        assert theta == pytest.approx(0.022 / 0.0182, rel=1e-15)
        assert theta > 1.0

    def test_stiff_limit_full_relaxation(self):
        assert abs(b.collision_theta(0.1, 1e-16) - 1.0) < 1e-13

    def test_zero_step_limit(self):
        assert b.collision_theta(1e-12, 1.0) < 1e-11
        assert b.collision_theta(1e-12, 1.0) > 0.0

    def test_rejects_nonpositive_arguments(self):
        with pytest.raises(ValueError):
            b.collision_theta(0.0, 0.01)
        with pytest.raises(ValueError):
            b.collision_theta(0.1, 0.0)
        with pytest.raises(ValueError):
            b.collision_theta(-0.1, 0.01)

    @given(h=st.floats(1e-8, 1e2), eps=st.floats(1e-12, 1e2))
    def test_theta_bounds(self, h, eps):
        theta = b.collision_theta(h, eps)
        assert theta > 0.0
        assert abs(1.0 - theta) <= 1.0
        assert np.isfinite(theta)


class TestCollisionStep:
    def _pair(self, seed=0):
        rng = np.random.default_rng(seed)
        g = b.build_grid(-1, 1, -7, 7, 12, 48)
        f = perturbed_maxwellian(g, rng)
        m = b.compute_moments(f)
        mt = eval_modified_maxwellian(m, build_correction(m, g), g)
        return f, mt

    def test_theta_zero_is_identity(self):
        f, mt = self._pair()
        out = b.collision_step(f, mt, 0.0)
        assert np.array_equal(out.values, f.values)

    def test_theta_one_is_full_relaxation(self):
        f, mt = self._pair()
        out = b.collision_step(f, mt, 1.0)
        assert np.array_equal(out.values, mt.values)

    def test_affine_blend_value(self):
        g = b.build_grid(0, 1, -1, 1, 5, 4)
        f = b.DistributionField(np.full((5, 4), 2.0), g)
        m = b.DistributionField(np.full((5, 4), 4.0), g)
        out = b.collision_step(f, m, 0.5)
        assert np.all(out.values == 3.0)

    def test_grid_mismatch_rejected(self):
        g1 = b.build_grid(0, 1, -1, 1, 5, 4)
        g2 = b.build_grid(0, 1, -1, 1, 5, 4)
        f = b.DistributionField(np.ones((5, 4)), g1)
        m = b.DistributionField(np.ones((5, 4)), g2)
        with pytest.raises(ValueError, match="grid"):
            b.collision_step(f, m, 0.5)

    @given(theta=st.floats(-0.5, 1.5))
    def test_conserves_discrete_moments_for_any_theta(self, theta):
        f, mt = self._pair(seed=3)
        out = b.collision_step(f, mt, theta)
        m0 = b.compute_moments(f)
        m1 = b.compute_moments(out)
        assert np.all(np.abs(m1.rho - m0.rho) <= 1e-13 * np.abs(m0.rho))
        assert np.all(np.abs(m1.mom - m0.mom) <= 1e-13 * np.abs(m0.mom))
        assert np.all(np.abs(m1.energy - m0.energy) <= 1e-13 * np.abs(m0.energy))

    def test_fixed_point(self):
        _, mt = self._pair(seed=5)
        out = b.collision_step(mt, mt, 1.7)
        # theta*M + (1 - theta)*M leaves M unchanged up to one rounding
        assert np.allclose(out.values, mt.values, rtol=1e-15, atol=1e-18)

    def test_asymptotic_preserving_blend(self):
        # deep in the stiff regime theta is within ~5*eps/h of 1, so a single
        # blend lands essentially on the target for every sub-step length
        f, mt = self._pair(seed=8)
        for h in (1e-4, 1e-2, 1.0):
            theta = b.collision_theta(h, 1e-16)
            out = b.collision_step(f, mt, theta)
            assert np.abs(out.values - mt.values).max() < 1e-10

    def test_in_place_update(self):
        f, mt = self._pair(seed=9)
        expected = 0.3 * mt.values + 0.7 * f.values
        out = b.collision_step(f, mt, 0.3, in_place=True)
        assert out is f
        assert np.array_equal(f.values, expected)
