"""Nonlinear shallow water solver with a generating left boundary.

The interior update is the Lax-Friedrichs finite-volume scheme for

    d_t zeta + d_x q = 0
    d_t q + d_x ( g (h^2 - h0^2) / 2 + q^2 / h ) = 0,      h = h0 + zeta,

written for the deviation from the rest depth h0 so that still water is an
exact fixed point. The left boundary imposes an elevation signal f(t); the
matching discharge is recovered from the outgoing characteristic, which is
advected to the boundary node along its own (interpolated) speed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import GRAVITY, BoundaryForcing, Grid1D, WaveState
from .errors import CflError, ConfigurationError, DepthError, DivergenceError


@dataclass(frozen=True)
class SweParams:
    """Gravity and rest depth of a dimensional run."""

    gravity: float = GRAVITY
    depth: float = 1.0

    def __post_init__(self) -> None:
        if not (self.gravity > 0.0):
            raise ConfigurationError(f"gravity must be positive, got {self.gravity}")
        if not (self.depth > 0.0):
            raise ConfigurationError(f"depth must be positive, got {self.depth}")

    @property
    def celerity(self) -> float:
        return math.sqrt(self.gravity * self.depth)


def sw_flux(zeta, q, params: SweParams):
    """Conservative flux (mass, momentum) of the shallow water system."""
    h = params.depth + zeta
    momentum = 0.5 * params.gravity * (h * h - params.depth**2) + q * q / h
    return q, momentum


def wave_speeds(zeta, q, params: SweParams):
    """Characteristic speeds (lam_minus, lam_plus) = -+u + sqrt(g h).

    Both are positive in the subcritical regime; lam_minus is the speed at
    which the outgoing invariant travels toward the left boundary.
    """
    h = params.depth + zeta
    u = q / h
    c = np.sqrt(params.gravity * h)
    return c - u, c + u


def riemann_invariants(zeta, q, params: SweParams):
    """Invariants (r_minus, r_plus) = 2 (sqrt(g h) - sqrt(g h0)) -+ u."""
    h = params.depth + zeta
    u = q / h
    base = 2.0 * (np.sqrt(params.gravity * h) - params.celerity)
    return base - u, base + u


def boundary_discharge(f: float, r_minus: float, params: SweParams) -> float:
    """Discharge at the boundary node from the imposed elevation f and the
    outgoing invariant: q0 = (h0 + f) * (2 (sqrt(g (h0+f)) - sqrt(g h0)) - r-).
    """
    h = params.depth + f
    if h <= 0.0:
        raise DepthError(f"imposed elevation {f} dries the boundary (h0={params.depth})")
    return h * (2.0 * (math.sqrt(params.gravity * h) - params.celerity) - r_minus)


def advance_outgoing_invariant(
    r0: float, r1: float, lam0: float, lam1: float, dt: float, dx: float
) -> tuple[float, bool]:
    """One explicit update of the outgoing invariant at the boundary node.

    The invariant is advected from its foot x = lam dt, where lam linearly
    interpolates the speeds lam0 (boundary) and lam1 (first interior node) at
    the foot itself: solving lam(alpha) dt = alpha dx gives
    alpha = dt lam1 / (dx - dt (lam0 - lam1)). A non-positive denominator
    means the time step outruns the characteristic cone (hard error); a foot
    outside [0, dx] is clamped and flagged (supercritical or over-long step).
    """
    denom = dx - dt * (lam0 - lam1)
    if denom <= 0.0:
        raise CflError(
            f"characteristic foot interpolation broke down: dx - dt (lam0 - lam1) "
            f"= {denom} <= 0 (lam0={lam0}, lam1={lam1}, dt={dt}, dx={dx})"
        )
    alpha = dt * lam1 / denom
    clamped = not 0.0 <= alpha <= 1.0
    alpha = min(max(alpha, 0.0), 1.0)
    lam = alpha * lam0 + (1.0 - alpha) * lam1
    # with an unclamped alpha, lam dt = alpha dx exactly, so nu == alpha
    nu = lam * dt / dx
    if not 0.0 <= nu <= 1.0:
        clamped = True
        nu = min(max(nu, 0.0), 1.0)
    return (1.0 - nu) * r0 + nu * r1, clamped


def lf_step_sw(
    zeta: np.ndarray,
    q: np.ndarray,
    left_ghost: tuple[float, float],
    params: SweParams,
    dt: float,
    dx: float,
    right: str = "extrapolate",
) -> tuple[np.ndarray, np.ndarray]:
    """One Lax-Friedrichs step on the interior nodes.

    left_ghost is the boundary state (f, q0); the right ghost copies the last
    node ("extrapolate") or mirrors it with the discharge negated ("wall").
    """
    if right == "extrapolate":
        ghost_r = (zeta[-1], q[-1])
    elif right == "wall":
        ghost_r = (zeta[-1], -q[-1])
    else:
        raise ConfigurationError(f"unknown right boundary {right!r}")

    ze = np.concatenate(([left_ghost[0]], zeta, [ghost_r[0]]))
    qe = np.concatenate(([left_ghost[1]], q, [ghost_r[1]]))
    fm, fq = sw_flux(ze, qe, params)

    nu = dx / (2.0 * dt)
    face_m = 0.5 * (fm[1:] + fm[:-1]) - nu * (ze[1:] - ze[:-1])
    face_q = 0.5 * (fq[1:] + fq[:-1]) - nu * (qe[1:] - qe[:-1])

    zeta_new = zeta - (dt / dx) * (face_m[1:] - face_m[:-1])
    q_new = q - (dt / dx) * (face_q[1:] - face_q[:-1])
    return zeta_new, q_new


@dataclass
class CharacteristicTrace:
    """Boundary-node state evolved by the generating condition."""

    r_minus: float
    q_bc: float


class SweSolver:
    """Time stepper coupling the LF interior with the characteristic boundary.

    Parameters
    ----------
    grid, params, forcing : the run definition; forcing only needs f(t).
    zeta0, q0 : initial fields on the closed grid (nodes 0..n_x); node 0
        seeds the boundary trace.
    courant : fixed-step CFL number; the default step is
        courant * dx / sqrt(g h0).
    right : "extrapolate" or "wall".
    cfl_strict : raise instead of warn when the step outruns the fastest wave.
    """

    def __init__(
        self,
        grid: Grid1D,
        params: SweParams,
        forcing: BoundaryForcing,
        zeta0: np.ndarray,
        q0: np.ndarray,
        courant: float = 0.9,
        right: str = "extrapolate",
        cfl_strict: bool = False,
    ) -> None:
        zeta0 = np.asarray(zeta0, dtype=float)
        q0 = np.asarray(q0, dtype=float)
        if zeta0.shape != (grid.n_x + 1,) or q0.shape != (grid.n_x + 1,):
            raise ConfigurationError(
                f"initial fields must cover the closed grid ({grid.n_x + 1} nodes)"
            )
        if not (0.0 < courant):
            raise ConfigurationError(f"courant must be positive, got {courant}")
        self._check_depth(zeta0, params, step=0)

        self.grid = grid
        self.params = params
        self.forcing = forcing
        self.courant = courant
        self.right = right
        self.cfl_strict = cfl_strict

        self.zeta = zeta0[1:].copy()
        self.q = q0[1:].copy()
        r_minus, _ = riemann_invariants(zeta0[0], q0[0], params)
        self.trace = CharacteristicTrace(r_minus=float(r_minus), q_bc=float(q0[0]))
        self.t = 0.0
        self.step_count = 0
        self.warnings: list[str] = []
        self._cfl_flagged = False
        self._clamp_flagged = False

    @property
    def default_dt(self) -> float:
        return self.courant * self.grid.dx / self.params.celerity

    @staticmethod
    def _check_depth(zeta, params, step):
        h_min = params.depth + np.min(zeta)
        if not (h_min > 0.0):
            raise DepthError(f"total depth reached {h_min} at step {step}")

    def _warn_once(self, flag_name: str, message: str) -> None:
        if not getattr(self, flag_name):
            setattr(self, flag_name, True)
            self.warnings.append(message)

    def step(self, dt: float | None = None) -> None:
        dt = self.default_dt if dt is None else dt
        dx = self.grid.dx
        f_now = self.forcing.elevation(self.t)
        ghost = (f_now, self.trace.q_bc)

        lam_m0, lam_p0 = wave_speeds(f_now, ghost[1], self.params)
        lam_m, lam_p = wave_speeds(self.zeta, self.q, self.params)
        speed = max(
            np.max(np.abs(lam_m)), np.max(np.abs(lam_p)), abs(lam_m0), abs(lam_p0)
        )
        if speed * dt / dx > 1.0 + 1e-9:
            msg = (
                f"CFL exceeded at step {self.step_count}: max speed {speed:.4g}, "
                f"dt/dx = {dt / dx:.4g}"
            )
            if self.cfl_strict:
                raise CflError(msg)
            self._warn_once("_cfl_flagged", msg)

        zeta_new, q_new = lf_step_sw(
            self.zeta, self.q, ghost, self.params, dt, dx, self.right
        )

        r1_now, _ = riemann_invariants(self.zeta[0], self.q[0], self.params)
        lam_m1 = lam_m[0] if np.ndim(lam_m) else lam_m
        r_new, clamped = advance_outgoing_invariant(
            self.trace.r_minus, float(r1_now), float(lam_m0), float(lam_m1), dt, dx
        )
        if clamped:
            self._warn_once(
                "_clamp_flagged",
                f"characteristic foot clamped at step {self.step_count} "
                f"(supercritical boundary?)",
            )

        self._check_depth(zeta_new, self.params, self.step_count + 1)
        if not (np.all(np.isfinite(zeta_new)) and np.all(np.isfinite(q_new))):
            raise DivergenceError(
                f"non-finite fields at step {self.step_count + 1}, t = {self.t + dt:.8g}"
            )

        f_next = self.forcing.elevation(self.t + dt)
        self.zeta = zeta_new
        self.q = q_new
        self.trace.r_minus = r_new
        self.trace.q_bc = boundary_discharge(f_next, r_new, self.params)
        self.t += dt
        self.step_count += 1

    def run(self, t_final: float, dt: float | None = None, on_step=None) -> "SweSolver":
        """Advance to t_final with fixed steps; the last step is shortened so
        the run lands on t_final exactly."""
        dt = self.default_dt if dt is None else dt
        tiny = 1e-12 * max(1.0, abs(t_final))
        while self.t < t_final - tiny:
            remaining = t_final - self.t
            last = remaining <= dt * (1.0 + 1e-12)
            self.step(min(dt, remaining))
            if last:
                self.t = t_final
            if on_step is not None:
                on_step(self)
        return self

    def state(self) -> WaveState:
        return WaveState(self.zeta.copy(), self.q.copy(), self.trace.q_bc, self.t)
