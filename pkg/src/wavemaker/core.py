"""Grids, wave states, scaling, and boundary forcing.

These are the primitives shared by the shallow water and Boussinesq solvers:
a uniform 1D grid whose node 0 carries the generating boundary, the (zeta, q)
state vector over the interior nodes, dimensional/dimensionless conversion,
and the time signal f(t) imposed at the boundary together with its second
derivative.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import ConfigurationError, ForcingRangeError

GRAVITY = 9.81  # default gravitational acceleration [m s^-2]


@dataclass(frozen=True)
class Grid1D:
    """Uniform grid with nodes x_i = x_left + i * dx for i = 0..n_x.

    Node 0 is the generating boundary; nodes 1..n_x carry the unknowns.

    Attributes:
        x_left: coordinate of the boundary node.
        extent: domain length (x_right - x_left), strictly positive.
        n_x: number of cells, at least 2.
    """

    x_left: float
    extent: float
    n_x: int

    def __post_init__(self) -> None:
        if not isinstance(self.n_x, (int, np.integer)):
            raise ConfigurationError(f"n_x must be an integer, got {self.n_x!r}")
        if self.n_x < 2:
            raise ConfigurationError(f"need at least 2 cells, got n_x={self.n_x}")
        if not (self.extent > 0.0):
            raise ConfigurationError(f"extent must be positive, got {self.extent}")

    @property
    def dx(self) -> float:
        return self.extent / self.n_x

    @property
    def x_right(self) -> float:
        return self.x_left + self.extent

    @property
    def nodes(self) -> np.ndarray:
        """All node coordinates, length n_x + 1."""
        return self.x_left + self.dx * np.arange(self.n_x + 1)

    @property
    def interior(self) -> np.ndarray:
        """Coordinates of the unknown-carrying nodes 1..n_x."""
        return self.x_left + self.dx * np.arange(1, self.n_x + 1)


def build_grid(x_left: float, extent: float, n_x: int) -> Grid1D:
    """Construct a Grid1D (kept as a function so configs map 1:1 onto calls)."""
    return Grid1D(float(x_left), float(extent), int(n_x))


@dataclass
class WaveState:
    """Free-surface state at one instant.

    zeta and q live on the interior nodes (i = 1..n_x); q_trace is the
    discharge at the boundary node 0, which the generating condition evolves
    by its own ODE.
    """

    zeta: np.ndarray
    q: np.ndarray
    q_trace: float
    t: float

    def __post_init__(self) -> None:
        self.zeta = np.asarray(self.zeta, dtype=float)
        self.q = np.asarray(self.q, dtype=float)
        if self.zeta.ndim != 1 or self.q.ndim != 1:
            raise ConfigurationError("zeta and q must be 1D arrays")
        if self.zeta.shape != self.q.shape:
            raise ConfigurationError(
                f"zeta and q lengths differ: {self.zeta.size} vs {self.q.size}"
            )
        if not math.isfinite(self.q_trace):
            raise ConfigurationError(f"q_trace must be finite, got {self.q_trace}")

    def copy(self) -> "WaveState":
        return WaveState(self.zeta.copy(), self.q.copy(), self.q_trace, self.t)


@dataclass(frozen=True)
class PhysicalScales:
    """Characteristic scales of a dimensional configuration.

    depth is the still-water depth, amplitude the typical wave amplitude and
    wavelength the typical horizontal scale; together they fix the two
    dimensionless numbers eps = amplitude/depth (nonlinearity) and
    mu = (depth/wavelength)^2 (dispersion).
    """

    depth: float
    amplitude: float
    wavelength: float
    gravity: float = GRAVITY

    def __post_init__(self) -> None:
        for name in ("depth", "amplitude", "wavelength", "gravity"):
            if not (getattr(self, name) > 0.0):
                raise ConfigurationError(f"{name} must be positive")

    @property
    def eps(self) -> float:
        return self.amplitude / self.depth

    @property
    def mu(self) -> float:
        return (self.depth / self.wavelength) ** 2

    @property
    def celerity(self) -> float:
        """Long-wave speed sqrt(g * depth)."""
        return math.sqrt(self.gravity * self.depth)


@dataclass(frozen=True)
class DimensionlessParams:
    """Nonlinearity and dispersion parameters of the dimensionless system."""

    eps: float
    mu: float

    def __post_init__(self) -> None:
        if not (self.eps > 0.0):
            raise ConfigurationError(f"eps must be positive, got {self.eps}")
        if not (self.mu > 0.0):
            # mu = 0 removes the dispersive term entirely; that regime is the
            # plain shallow water system and has its own solver.
            raise ConfigurationError(f"mu must be positive, got {self.mu}")

    @property
    def delta(self) -> float:
        """Width of the boundary layer carrying the dispersive correction."""
        return math.sqrt(self.mu / 3.0)


def nondimensionalize(state: WaveState, scales: PhysicalScales) -> WaveState:
    """Rescale a dimensional state to the dimensionless variables.

    Elevation scales with the amplitude, discharge with amplitude * celerity,
    time with wavelength / celerity.
    """
    a, c = scales.amplitude, scales.celerity
    return WaveState(
        zeta=state.zeta / a,
        q=state.q / (a * c),
        q_trace=state.q_trace / (a * c),
        t=state.t * c / scales.wavelength,
    )


def redimensionalize(state: WaveState, scales: PhysicalScales) -> WaveState:
    """Inverse of nondimensionalize."""
    a, c = scales.amplitude, scales.celerity
    return WaveState(
        zeta=state.zeta * a,
        q=state.q * (a * c),
        q_trace=state.q_trace * (a * c),
        t=state.t * scales.wavelength / c,
    )


class BoundaryForcing:
    """Boundary elevation signal f(t) and its second time derivative.

    Two flavours exist. Analytic forcing wraps callables and is exact.
    Sampled forcing holds f on a uniform time grid (for example the recorded
    trace of a finer run): the second derivative is precomputed with the
    centered 3-point difference (one-sided second-order variants at the two
    ends) and both f and its derivatives are linearly interpolated between
    samples. Sampled forcing raises ForcingRangeError outside its window.
    """

    def __init__(self) -> None:
        raise TypeError("use BoundaryForcing.from_callables or .from_samples")

    @classmethod
    def _blank(cls) -> "BoundaryForcing":
        obj = object.__new__(cls)
        obj._f = None
        obj._fdot = None
        obj._fddot = None
        obj._t = None
        obj._samples = None
        obj._dsamples = None
        obj._ddsamples = None
        return obj

    @classmethod
    def from_callables(
        cls,
        f: Callable[[float], float],
        fddot: Callable[[float], float] | None = None,
        fdot: Callable[[float], float] | None = None,
    ) -> "BoundaryForcing":
        obj = cls._blank()
        obj._f = f
        obj._fdot = fdot
        obj._fddot = fddot
        return obj

    @classmethod
    def from_samples(cls, t: np.ndarray, f: np.ndarray) -> "BoundaryForcing":
        t = np.asarray(t, dtype=float)
        f = np.asarray(f, dtype=float)
        if t.ndim != 1 or t.shape != f.shape:
            raise ConfigurationError("t and f must be 1D arrays of equal length")
        if t.size < 4:
            raise ConfigurationError(
                f"need at least 4 samples for end stencils, got {t.size}"
            )
        steps = np.diff(t)
        dt = steps[0]
        if dt <= 0.0 or np.any(np.abs(steps - dt) > 1e-9 * abs(dt)):
            raise ConfigurationError("forcing samples must be uniformly spaced")

        obj = cls._blank()
        obj._t = t
        obj._samples = f
        obj._dsamples = _sampled_derivative(f, dt)
        obj._ddsamples = _sampled_second_derivative(f, dt)
        return obj

    @classmethod
    def constant(cls, value: float = 0.0) -> "BoundaryForcing":
        """Time-independent forcing (rest boundary when value = 0)."""
        return cls.from_callables(
            lambda t: value, fddot=lambda t: 0.0, fdot=lambda t: 0.0
        )

    @property
    def is_analytic(self) -> bool:
        return self._f is not None

    def _clamp(self, t: float) -> float:
        t0, t1 = self._t[0], self._t[-1]
        tol = 1e-9 * (t1 - t0)
        if t < t0 - tol or t > t1 + tol:
            raise ForcingRangeError(
                f"forcing queried at t={t}, recorded window is [{t0}, {t1}]"
            )
        return min(max(t, t0), t1)

    def elevation(self, t: float) -> float:
        """f(t)."""
        if self.is_analytic:
            return float(self._f(t))
        return float(np.interp(self._clamp(t), self._t, self._samples))

    def acceleration(self, t: float) -> float:
        """Second derivative of f at t."""
        if self.is_analytic:
            if self._fddot is None:
                raise ConfigurationError("analytic forcing lacks a second derivative")
            return float(self._fddot(t))
        return float(np.interp(self._clamp(t), self._t, self._ddsamples))

    def slope(self, t: float) -> float:
        """First derivative of f at t (centered difference if not supplied)."""
        if self.is_analytic:
            if self._fdot is not None:
                return float(self._fdot(t))
            h = 1e-6
            return (float(self._f(t + h)) - float(self._f(t - h))) / (2.0 * h)
        return float(np.interp(self._clamp(t), self._t, self._dsamples))

    def sample(self, t: float) -> tuple[float, float]:
        """(f(t), f''(t)) as consumed by the generating boundary condition."""
        return self.elevation(t), self.acceleration(t)


def _sampled_second_derivative(f: np.ndarray, dt: float) -> np.ndarray:
    """Centered 3-point second difference; one-sided second order at the ends."""
    dd = np.empty_like(f)
    dd[1:-1] = (f[2:] - 2.0 * f[1:-1] + f[:-2]) / dt**2
    dd[0] = (2.0 * f[0] - 5.0 * f[1] + 4.0 * f[2] - f[3]) / dt**2
    dd[-1] = (2.0 * f[-1] - 5.0 * f[-2] + 4.0 * f[-3] - f[-4]) / dt**2
    return dd


def _sampled_derivative(f: np.ndarray, dt: float) -> np.ndarray:
    """Centered first difference; one-sided second order at the ends."""
    d = np.empty_like(f)
    d[1:-1] = (f[2:] - f[:-2]) / (2.0 * dt)
    d[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * dt)
    d[-1] = (3.0 * f[-1] - 4.0 * f[-2] + f[-3]) / (2.0 * dt)
    return d
