"""Shallow water solver tests: flux algebra, characteristic boundary, LF step.

The one-step oracle at the bottom is a deliberately scalar, loop-based rewrite
of the finite-volume update; the implementation must match it to rounding.
"""

import math

import numpy as np
import pytest

from wavemaker.core import BoundaryForcing, build_grid
from wavemaker.errors import CflError, DepthError, DivergenceError
from wavemaker.swe import (
    SweParams,
    SweSolver,
    advance_outgoing_invariant,
    boundary_discharge,
    lf_step_sw,
    riemann_invariants,
    sw_flux,
    wave_speeds,
)

UNIT = SweParams(gravity=1.0, depth=1.0)


class TestFluxAlgebra:
    def test_flux_still_water_column(self):
        fm, fq = sw_flux(0.21, 0.0, UNIT)
        assert fm == 0.0
        assert fq == pytest.approx(0.232050, abs=1e-12)  # 0.5 (1.21^2 - 1)

    def test_flux_pure_discharge(self):
        fm, fq = sw_flux(0.0, 2.0, UNIT)
        assert fm == 2.0
        assert fq == pytest.approx(4.0, abs=1e-12)

    def test_flux_vectorized(self):
        fm, fq = sw_flux(np.array([0.21, 0.0]), np.array([0.0, 2.0]), UNIT)
        np.testing.assert_allclose(fq, [0.232050, 4.0], atol=1e-12)

    def test_wave_speeds(self):
        lam_m, lam_p = wave_speeds(0.21, 0.605, UNIT)  # h = 1.21, u = 0.5
        assert lam_p == pytest.approx(1.6, abs=1e-12)
        assert lam_m == pytest.approx(0.6, abs=1e-12)
        lam_m, lam_p = wave_speeds(0.0, -0.2, UNIT)
        assert lam_p == pytest.approx(0.8, abs=1e-12)
        assert lam_m == pytest.approx(1.2, abs=1e-12)

    def test_riemann_invariants(self):
        r_m, r_p = riemann_invariants(0.21, 0.605, UNIT)
        assert r_p == pytest.approx(0.7, abs=1e-12)
        assert r_m == pytest.approx(-0.3, abs=1e-12)

    def test_invariants_reconstruct_state(self):
        rng = np.random.default_rng(5)
        params = SweParams(gravity=9.81, depth=2.0)
        for _ in range(50):
            zeta = rng.uniform(-1.0, 3.0)
            q = rng.uniform(-4.0, 4.0)
            r_m, r_p = riemann_invariants(zeta, q, params)
            h = params.depth + zeta
            u = 0.5 * (r_p - r_m)
            root = 0.25 * (r_p + r_m) + math.sqrt(params.gravity * params.depth)
            h_back = root * root / params.gravity
            assert u * h_back == pytest.approx(q, rel=1e-12)
            assert h_back == pytest.approx(h, rel=1e-12)


class TestBoundaryDischarge:
    def test_values(self):
        assert boundary_discharge(0.21, 0.0, UNIT) == pytest.approx(0.242, abs=1e-12)
        assert boundary_discharge(0.0, -0.3, UNIT) == pytest.approx(0.3, abs=1e-12)

    def test_inverts_riemann_invariant(self):
        # feeding back the outgoing invariant of a boundary state must
        # reproduce that state's discharge exactly
        rng = np.random.default_rng(8)
        params = SweParams(gravity=9.81, depth=1.5)
        for _ in range(50):
            f = rng.uniform(-0.5, 1.0)
            q = rng.uniform(-3.0, 3.0)
            r_m, _ = riemann_invariants(f, q, params)
            assert boundary_discharge(f, r_m, params) == pytest.approx(q, rel=1e-12)

    def test_dry_boundary(self):
        with pytest.raises(DepthError):
            boundary_discharge(-1.0, 0.0, UNIT)


class TestCharacteristicUpdate:
    def test_interpolated_foot(self):
        # lam0 = 1, lam1 = 0.5, dt/dx = 0.9: alpha = 0.45/0.55 = 9/11 and the
        # interpolated speed satisfies lam dt = alpha dx, so the update weight
        # equals alpha
        r_new, clamped = advance_outgoing_invariant(
            2.0, 4.0, lam0=1.0, lam1=0.5, dt=0.9, dx=1.0
        )
        assert not clamped
        assert r_new == pytest.approx(2.0 + 2.0 * (9.0 / 11.0), rel=1e-14)

    def test_equal_speeds_full_step(self):
        # lam dt = dx exactly: the foot lands on node 1
        r_new, clamped = advance_outgoing_invariant(
            1.0, 7.0, lam0=2.0, lam1=2.0, dt=0.5, dx=1.0
        )
        assert not clamped
        assert r_new == pytest.approx(7.0, rel=1e-14)

    def test_plain_upwind_when_speeds_equal(self):
        r_new, _ = advance_outgoing_invariant(
            1.0, 3.0, lam0=0.5, lam1=0.5, dt=0.4, dx=1.0
        )
        assert r_new == pytest.approx(1.0 + 0.2 * 2.0, rel=1e-14)

    def test_supercritical_clamps_and_flags(self):
        r_new, clamped = advance_outgoing_invariant(
            5.0, 9.0, lam0=-0.5, lam1=-0.5, dt=0.9, dx=1.0
        )
        assert clamped
        assert r_new == 5.0  # foot clamped to the boundary node

    def test_vanishing_denominator(self):
        # dx - dt (lam0 - lam1) <= 0: the interpolation has no valid root
        with pytest.raises(CflError):
            advance_outgoing_invariant(0.0, 0.0, lam0=2.0, lam1=0.5, dt=1.0, dx=1.0)


def oracle_lf_step(zeta, q, ghost, params, dt, dx, right="extrapolate"):
    """Scalar reimplementation of one finite-volume step (test oracle)."""
    g, h0 = params.gravity, params.depth
    n = len(zeta)
    ze = [ghost[0]] + list(zeta)
    qe = [ghost[1]] + list(q)
    if right == "extrapolate":
        ze.append(zeta[-1])
        qe.append(q[-1])
    else:  # wall
        ze.append(zeta[-1])
        qe.append(-q[-1])

    def flux(z, qq):
        h = h0 + z
        return qq, 0.5 * g * (h * h - h0 * h0) + qq * qq / h

    nu = dx / (2.0 * dt)
    faces = []
    for i in range(1, n + 2):
        f_i = flux(ze[i], qe[i])
        f_im = flux(ze[i - 1], qe[i - 1])
        faces.append(
            (
                0.5 * (f_i[0] + f_im[0]) - nu * (ze[i] - ze[i - 1]),
                0.5 * (f_i[1] + f_im[1]) - nu * (qe[i] - qe[i - 1]),
            )
        )
    z_new = np.array(
        [zeta[i] - dt / dx * (faces[i + 1][0] - faces[i][0]) for i in range(n)]
    )
    q_new = np.array(
        [q[i] - dt / dx * (faces[i + 1][1] - faces[i][1]) for i in range(n)]
    )
    return z_new, q_new


class TestLfStep:
    @pytest.mark.parametrize("right", ["extrapolate", "wall"])
    def test_matches_scalar_oracle(self, right):
        rng = np.random.default_rng(17)
        params = SweParams(gravity=9.81, depth=2.0)
        zeta = rng.uniform(-0.3, 0.5, size=12)
        q = rng.uniform(-1.0, 1.0, size=12)
        ghost = (0.1, -0.2)
        z1, q1 = lf_step_sw(zeta, q, ghost, params, dt=0.004, dx=0.01, right=right)
        z2, q2 = oracle_lf_step(zeta, q, ghost, params, 0.004, 0.01, right)
        np.testing.assert_allclose(z1, z2, atol=1e-14)
        np.testing.assert_allclose(q1, q2, atol=1e-14)

    def test_rest_state_is_fixed_point(self):
        params = SweParams(gravity=9.81, depth=2.0)
        zeta = np.zeros(10)
        q = np.zeros(10)
        z1, q1 = lf_step_sw(zeta, q, (0.0, 0.0), params, dt=0.001, dx=0.01)
        assert np.all(z1 == 0.0)
        assert np.all(q1 == 0.0)

    def test_mass_balance_single_step(self):
        # cell-sum change must equal the boundary-face fluxes exactly
        rng = np.random.default_rng(23)
        params = SweParams(gravity=1.0, depth=1.0)
        zeta = rng.uniform(-0.2, 0.4, size=30)
        q = rng.uniform(-0.5, 0.5, size=30)
        ghost = (0.05, 0.3)
        dt, dx = 0.002, 0.01
        z1, _ = lf_step_sw(zeta, q, ghost, params, dt, dx)
        nu = dx / (2.0 * dt)
        left_face = 0.5 * (q[0] + ghost[1]) - nu * (zeta[0] - ghost[0])
        right_face = q[-1]  # extrapolated ghost: no jump at the last face
        change = dx * (z1.sum() - zeta.sum())
        assert change == pytest.approx(-dt * (right_face - left_face), abs=1e-12)


class TestSweSolver:
    def make_solver(self, n=40, forcing=None, **kw):
        grid = build_grid(0.0, 4.0, n)
        params = SweParams(gravity=1.0, depth=1.0)
        if forcing is None:
            forcing = BoundaryForcing.constant(0.0)
        zeta0 = np.zeros(n + 1)
        q0 = np.zeros(n + 1)
        return SweSolver(grid, params, forcing, zeta0, q0, **kw)

    def test_lake_at_rest(self):
        s = self.make_solver()
        s.run(1.0)
        assert np.max(np.abs(s.zeta)) <= 1e-15
        assert np.max(np.abs(s.q)) <= 1e-15
        assert s.t == 1.0

    def test_wave_maker_produces_incoming_wave(self):
        period = 2.0
        forcing = BoundaryForcing.from_callables(
            lambda t: 0.1 * math.sin(2.0 * math.pi * t / period)
        )
        s = self.make_solver(n=200, forcing=forcing)
        s.run(1.0)
        # the front has travelled roughly a unit distance; beyond it, rest
        assert np.max(np.abs(s.zeta[:40])) > 1e-3
        assert np.max(np.abs(s.zeta[150:])) < 1e-8
        # subcritical inflow should never clamp the characteristic foot
        assert not any("clamp" in w for w in s.warnings)

    def test_state_snapshot(self):
        s = self.make_solver()
        st = s.state()
        assert st.zeta.shape == (40,)
        assert st.t == 0.0
        assert st.q_trace == 0.0

    def test_depth_error(self):
        grid = build_grid(0.0, 1.0, 10)
        params = SweParams(gravity=1.0, depth=1.0)
        zeta0 = np.full(11, -2.0)  # below the bottom
        with pytest.raises(DepthError):
            SweSolver(grid, params, BoundaryForcing.constant(), zeta0, np.zeros(11))

    def test_divergence_error_names_step(self):
        s = self.make_solver(n=20)
        s.zeta[5] = np.inf
        with pytest.raises(DivergenceError, match="step"):
            s.run(0.5)

    def test_cfl_warning_recorded(self):
        grid = build_grid(0.0, 1.0, 20)
        params = SweParams(gravity=1.0, depth=1.0)
        zeta0 = np.zeros(21)
        q0 = np.full(21, 3.0)  # u = 3: speeds well above courant budget
        s = SweSolver(grid, params, BoundaryForcing.constant(), zeta0, q0, courant=0.9)
        try:
            s.run(5 * s.default_dt)
        except (DepthError, DivergenceError):
            pass
        assert any("CFL" in w for w in s.warnings)

    def test_final_step_lands_exactly(self):
        s = self.make_solver(n=30)
        s.run(0.3333)
        assert s.t == 0.3333
