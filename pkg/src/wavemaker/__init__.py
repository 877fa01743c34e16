"""Generating (wave-maker) boundary conditions for 1D free-surface solvers.

The package provides:

- a shallow water solver whose left boundary imposes an elevation signal and
  recovers the discharge from the outgoing Riemann invariant (``swe``),
- a Boussinesq solver where the dispersive correction is handled through a
  nonlocal flux and an exponential boundary layer, so the same elevation
  signal can drive a dispersive wave tank (``boussinesq``),
- the solitary-wave construction for that system (``soliton``),
- a validation harness measuring convergence against nested reference runs
  (``validation``), and a small CLI (``wavemaker``).
"""

from .core import (
    BoundaryForcing,
    DimensionlessParams,
    Grid1D,
    GRAVITY,
    PhysicalScales,
    WaveState,
    build_grid,
    nondimensionalize,
    redimensionalize,
)
from .errors import (
    CflError,
    ConfigurationError,
    CsvFormatError,
    DepthError,
    DivergenceError,
    ForcingRangeError,
    WavemakerError,
)

__all__ = [
    "BoundaryForcing",
    "CflError",
    "ConfigurationError",
    "CsvFormatError",
    "DepthError",
    "DimensionlessParams",
    "DivergenceError",
    "ForcingRangeError",
    "GRAVITY",
    "Grid1D",
    "PhysicalScales",
    "WaveState",
    "WavemakerError",
    "build_grid",
    "nondimensionalize",
    "redimensionalize",
]

__version__ = "0.1.0"
