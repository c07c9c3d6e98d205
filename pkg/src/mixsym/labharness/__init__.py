"""Configuration-driven sweeps, verification suites, file I/O, and the CLI."""

from ..series import ScalingSeries
from .config import MODEL_CATALOG, ConfigError, load_config, validate_config
from .emit import (
    read_csv,
    read_series_json,
    write_csv,
    write_json,
    write_svg,
)
from .runner import MonotonicityError, covering_sweep, fit_series
from .verify import CheckResult, VerifyReport, run_verify

__all__ = [
    "ScalingSeries",
    "MODEL_CATALOG",
    "ConfigError",
    "load_config",
    "validate_config",
    "read_csv",
    "read_series_json",
    "write_csv",
    "write_json",
    "write_svg",
    "MonotonicityError",
    "covering_sweep",
    "fit_series",
    "CheckResult",
    "VerifyReport",
    "run_verify",
]
