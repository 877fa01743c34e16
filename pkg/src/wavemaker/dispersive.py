"""Discrete inverses of the operator 1 - (mu/3) d_xx on the grid interior.

The Boussinesq momentum flux is smoothed by the inverse of a Helmholtz-type
operator once per time step, so each variant factorizes its matrix at
construction and then solves in O(n) (tridiagonal) or O(n log n) (circulant).

Stencil (a = mu / (3 dx^2), unknowns v_1..v_n):

    interior rows     -a v_{i-1} + (1 + 2a) v_i - a v_{i+1}
    NeumannInverse    first row (1 + a) v_1 - a v_2, and the same zero-slope
                      closure at the truncated right end
    DirichletInverse  first row (1 + 2a) v_1 - a v_2 (odd-reflection ghost),
                      Neumann closure kept on the right
    PeriodicInverse   wraparound rows, solved exactly through the FFT symbol
                      1 + 4a sin^2(pi k / n)

All three matrices are strictly diagonally dominant M-matrices, so the
inverses exist, preserve constants (up to the right-end closure) and map
nonnegative data to nonnegative data.
"""

from __future__ import annotations

import numpy as np
from scipy.linalg import cho_solve_banded, cholesky_banded

from .errors import ConfigurationError


def _check_args(n: int, mu: float, dx: float) -> None:
    if n < 2:
        raise ConfigurationError(f"need at least 2 nodes, got n={n}")
    if not (mu > 0.0):
        raise ConfigurationError(f"mu must be positive, got {mu}")
    if not (dx > 0.0):
        raise ConfigurationError(f"dx must be positive, got {dx}")


class _BandedInverse:
    """Shared banded-Cholesky machinery for the two tridiagonal variants."""

    #: diagonal entry of the first row, in units of a, minus 1 (set by subclass)
    _first_diag_coeff = None

    def __init__(self, n: int, mu: float, dx: float) -> None:
        _check_args(n, mu, dx)
        self.n = int(n)
        self.mu = float(mu)
        self.dx = float(dx)
        a = self.mu / (3.0 * self.dx * self.dx)
        self._a = a

        diag = np.full(self.n, 1.0 + 2.0 * a)
        diag[0] = 1.0 + self._first_diag_coeff * a
        diag[-1] = 1.0 + a
        self._diag = diag

        # upper banded storage: row 0 the superdiagonal (left-padded), row 1
        # the diagonal; symmetric positive definite, factor once
        band = np.zeros((2, self.n))
        band[0, 1:] = -a
        band[1, :] = diag
        self._factor = cholesky_banded(band, lower=False)

    def apply(self, rhs: np.ndarray) -> np.ndarray:
        """Solve the tridiagonal system for the given right-hand side."""
        rhs = np.asarray(rhs, dtype=float)
        if rhs.shape != (self.n,):
            raise ConfigurationError(
                f"rhs length {rhs.shape} does not match operator size {self.n}"
            )
        return cho_solve_banded((self._factor, False), rhs)

    def matvec(self, v: np.ndarray) -> np.ndarray:
        """Forward operator (the matrix itself); used by tests and checks."""
        v = np.asarray(v, dtype=float)
        out = self._diag * v
        out[:-1] -= self._a * v[1:]
        out[1:] -= self._a * v[:-1]
        return out


class NeumannInverse(_BandedInverse):
    """Inverse with a zero-slope boundary closure on both ends.

    This is the smoothing operator of the reformulated momentum equation;
    its value at the first node doubles as the boundary trace entering the
    generating condition (second-order accurate because the slope vanishes).
    """

    _first_diag_coeff = 1.0

    def boundary_value(self, rhs: np.ndarray) -> float:
        """Trace of the smoothed field at the boundary: first solution entry."""
        return float(self.apply(rhs)[0])


class DirichletInverse(_BandedInverse):
    """Inverse with a zero-value closure at the left boundary.

    Not used by the solver itself; it is the operator that commutes with the
    spatial derivative of NeumannInverse, which makes it the natural
    cross-check in the test suite.
    """

    _first_diag_coeff = 2.0


class PeriodicInverse:
    """Circulant variant for periodic reference runs, applied through rfft."""

    def __init__(self, n: int, mu: float, dx: float) -> None:
        _check_args(n, mu, dx)
        self.n = int(n)
        self.mu = float(mu)
        self.dx = float(dx)
        a = self.mu / (3.0 * self.dx * self.dx)
        self._a = a
        k = np.arange(self.n // 2 + 1)
        self._symbol = 1.0 + 4.0 * a * np.sin(np.pi * k / self.n) ** 2

    def apply(self, rhs: np.ndarray) -> np.ndarray:
        rhs = np.asarray(rhs, dtype=float)
        if rhs.shape != (self.n,):
            raise ConfigurationError(
                f"rhs length {rhs.shape} does not match operator size {self.n}"
            )
        return np.fft.irfft(np.fft.rfft(rhs) / self._symbol, n=self.n)

    def matvec(self, v: np.ndarray) -> np.ndarray:
        v = np.asarray(v, dtype=float)
        return (1.0 + 2.0 * self._a) * v - self._a * (np.roll(v, 1) + np.roll(v, -1))
