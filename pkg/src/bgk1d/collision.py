"""BGK relaxation sub-step: TR-BDF2-derived theta blend toward the Maxwellian."""

from __future__ import annotations

from .field import DistributionField


def collision_theta(h: float, epsilon: float) -> float:
    """Blend weight theta = h(h + 12 eps) / ((h + 3 eps)(h + 4 eps)).

    This is the exact reduction of the two TR-BDF2 stages applied to
    f' = (M - f)/eps with M frozen over the sub-step. theta -> 0 as h -> 0
    (identity) and theta -> 1 as eps -> 0+ (full relaxation); theta can
    legitimately exceed 1 for intermediate stiffness.
    """
    h = float(h)
    epsilon = float(epsilon)
    if not (h > 0):
        raise ValueError(f"sub-step length must be positive, got {h}")
    if not (epsilon > 0):
        raise ValueError(f"epsilon must be positive, got {epsilon}")
    return h * (h + 12.0 * epsilon) / ((h + 3.0 * epsilon) * (h + 4.0 * epsilon))


def collision_step(
    f: DistributionField,
    m_tilde: DistributionField,
    theta: float,
    in_place: bool = False,
) -> DistributionField:
    """f_ij <- theta * M~_ij + (1 - theta) * f_ij pointwise.

    Because M~ has the same discrete (rho, m, E) as f, this blend preserves
    them for any theta.
    """
    if f.grid is not m_tilde.grid:
        raise ValueError("collision_step: fields live on different grids")
    blended = theta * m_tilde.values + (1.0 - theta) * f.values
    if in_place:
        f.values[:] = blended
        return f
    return DistributionField(blended, f.grid)
