"""Exception hierarchy shared across the package.

Every error raised intentionally by wavemaker derives from WavemakerError so
callers (and the CLI) can map failures to exit codes without matching on
message strings.
"""


class WavemakerError(Exception):
    """Base class for all wavemaker errors."""


class ConfigurationError(WavemakerError):
    """Invalid parameter, grid, or config-file input."""


class DepthError(WavemakerError):
    """Total water depth reached zero or became negative."""


class CflError(WavemakerError):
    """Characteristic-interpolation denominator vanished (time step too large)."""


class DivergenceError(WavemakerError):
    """Fields stopped being finite during time stepping."""


class ForcingRangeError(WavemakerError):
    """Sampled boundary forcing queried outside its recorded window."""


class CsvFormatError(WavemakerError):
    """Malformed CSV input; message carries file name and line number."""
