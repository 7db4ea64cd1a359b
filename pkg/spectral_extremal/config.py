"""
Overall configurations and constants for the spectral_extremal library.

Most numerical defaults can be overridden in three ways, in increasing order of
precedence: environment variables read at import time, a YAML config file (whose
path is given by `--config` or the environment variable `SPECTRAL_EXTREMAL_CONFIG`),
and command line flags.
"""

import os
from pathlib import Path
from typing import Any, Dict, Optional, Union
import warnings

import pydantic
import pydantic.version
import yaml


def _to_bool(s: str) -> bool:
    """
    Convert a string to a boolean value.
    """
    if not isinstance(s, str):
        raise TypeError(f"Expected a string, got {type(s)}")
    true_values = ("yes", "true", "t", "1", "y", "on")
    false_values = ("no", "false", "f", "0", "n", "off", "")
    s = s.lower()
    if s in true_values:
        return True
    elif s in false_values:
        return False
    else:
        raise ValueError(
            f"Invalid boolean value: {s}. Valid true values: {true_values}. Valid false"
            f" values: {false_values}."
        )


def _env_float(name: str, default: float) -> float:
    value = os.environ.get(name)
    if value is None:
        return default
    try:
        return float(value)
    except ValueError:
        print(
            f"You have set an invalid value for {name} {value}. Using default value"
            f" of {default}."
        )
        return default


def _env_int(name: str, default: int) -> int:
    value = os.environ.get(name)
    if value is None:
        return default
    try:
        return int(value)
    except ValueError:
        print(
            f"You have set an invalid value for {name} {value}. Using default value"
            f" of {default}."
        )
        return default


################################################################################
# Configurations you can change to customize the numerical behavior.
################################################################################

# Residual tolerance of the Perron solver, i.e. the infinity norm of A x - lambda x
# that counts as converged.
DEFAULT_TOL = _env_float("SPECTRAL_EXTREMAL_TOL", 1e-12)

# Maximum number of power iteration steps before giving up.
DEFAULT_MAX_ITERS = _env_int("SPECTRAL_EXTREMAL_MAX_ITERS", 10**7)

# Perron components closer than this count as equal when deciding whether a local
# switching is proper.
DEFAULT_TIE_TOL = _env_float("SPECTRAL_EXTREMAL_TIE_TOL", 1e-9)

# Two spectral radii closer than this are treated as equal.
DEFAULT_LAMBDA_TOL = _env_float("SPECTRAL_EXTREMAL_LAMBDA_TOL", 1e-9)

# In "auto" mode the Perron solver runs at most this many power iteration steps
# and then finishes with sparse inverse iteration. Path-like graphs have a spectral
# gap of order 1/n^2, which makes plain power iteration impractical beyond a few
# hundred vertices.
POWER_HANDOFF_ITERS = _env_int("SPECTRAL_EXTREMAL_POWER_HANDOFF_ITERS", 5000)

# Largest order the exhaustive oracle accepts without --force, per maximum degree.
# Orders for any other maximum degree fall back to the "default" entry.
DEFAULT_ORACLE_CAPS: Dict[int, int] = {2: 12, 3: 10, 4: 8}
DEFAULT_ORACLE_CAP = 7

# Relative tolerance bands for the limit checks.
DEFAULT_LIMIT_BANDS: Dict[str, float] = {"limit": 0.05, "sandwich": 0.20}

# Whether to run the slow acceptance tests (oracle at n = 10, n ~ 2000 limits, the
# Delta = 53 counterexample scan).
RUN_SLOW = _to_bool(os.environ.get("SPECTRAL_EXTREMAL_RUN_SLOW", "false"))

################################################################################
# Automatically generated constants. You do not need to change these.
################################################################################

# Cache directory for logs. To change it, set the environment variable
# SPECTRAL_EXTREMAL_CACHE_DIR before importing spectral_extremal. The directory is
# only created when something needs to be written into it.
CACHE_DIR = Path(
    os.environ.get(
        "SPECTRAL_EXTREMAL_CACHE_DIR", Path.home() / ".cache" / "spectral_extremal"
    )
)
LOGS_DIR = CACHE_DIR / "logs"

CONFIG_ENV_VAR = "SPECTRAL_EXTREMAL_CONFIG"

# Version of the JSON documents written by the command line.
JSON_SCHEMA_VERSION = 1

# Implementation of a compatible field validator for pydantic 1.x and 2.x. It only
# supports simple validators that take the field name and a (cls, value) function.
if pydantic.version.VERSION < "2.0.0":
    PYDANTIC_MAJOR_VERSION = 1
    from pydantic.class_validators import validator as compatible_field_validator

    warnings.warn(
        "You are using pydantic 1.x, which is not fully supported. We strongly"
        " recommend you to upgrade to pydantic 2.x if possible.",
        DeprecationWarning,
    )
else:
    PYDANTIC_MAJOR_VERSION = 2
    from pydantic import field_validator

    compatible_field_validator = field_validator  # type: ignore


class Config(pydantic.BaseModel):
    """
    Numerical configuration shared by the library and the command line.
    """

    tol: float = DEFAULT_TOL
    max_iters: int = DEFAULT_MAX_ITERS
    tie_tol: float = DEFAULT_TIE_TOL
    lambda_tol: float = DEFAULT_LAMBDA_TOL
    power_handoff_iters: int = POWER_HANDOFF_ITERS
    oracle_caps: Dict[int, int] = dict(DEFAULT_ORACLE_CAPS)
    limit_bands: Dict[str, float] = dict(DEFAULT_LIMIT_BANDS)
    threads: int = 1

    @compatible_field_validator("tol", "tie_tol", "lambda_tol")
    def _positive_tolerance(cls, value):
        if not value > 0:
            raise ValueError(f"tolerances must be positive, got {value}")
        return value

    @compatible_field_validator("max_iters", "threads")
    def _positive_count(cls, value):
        if value < 1:
            raise ValueError(f"counts must be at least 1, got {value}")
        return value

    @compatible_field_validator("power_handoff_iters")
    def _non_negative_count(cls, value):
        if value < 0:
            raise ValueError(f"power_handoff_iters must be >= 0, got {value}")
        return value

    @compatible_field_validator("oracle_caps")
    def _caps_above_delta(cls, value):
        for delta, cap in value.items():
            if cap < delta + 1:
                raise ValueError(
                    f"oracle cap for delta={delta} must be at least {delta + 1}, got"
                    f" {cap}"
                )
        return value

    @compatible_field_validator("limit_bands")
    def _positive_bands(cls, value):
        for name, band in value.items():
            if not band > 0:
                raise ValueError(f"limit band '{name}' must be positive, got {band}")
        return value

    def oracle_cap(self, delta: int) -> int:
        return self.oracle_caps.get(delta, max(DEFAULT_ORACLE_CAP, delta + 1))

    def band(self, name: str) -> float:
        return self.limit_bands.get(name, DEFAULT_LIMIT_BANDS.get(name, 0.05))

    def updated(self, **overrides: Any) -> "Config":
        """
        Returns a copy with the given fields replaced. None values are ignored so
        that unset command line flags keep the loaded values.
        """
        values = self.to_dict()
        values.update({k: v for k, v in overrides.items() if v is not None})
        return Config(**values)

    def to_dict(self) -> Dict[str, Any]:
        if PYDANTIC_MAJOR_VERSION == 1:
            return self.dict()
        return self.model_dump()

    @classmethod
    def field_names(cls):
        if PYDANTIC_MAJOR_VERSION == 1:
            return set(cls.__fields__)
        return set(cls.model_fields)


def load_config(path: Optional[Union[str, Path]] = None) -> Config:
    """
    Loads the configuration from a YAML file. If path is None, the file named by
    the environment variable SPECTRAL_EXTREMAL_CONFIG is used, and if that is not
    set either, the defaults are returned.

    Raises FileNotFoundError if the file does not exist and ValueError if it
    contains unknown keys or invalid values.
    """
    if path is None:
        path = os.environ.get(CONFIG_ENV_VAR)
        if not path:
            return Config()
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"Config file {path} does not exist.")
    with open(path) as f:
        content = yaml.safe_load(f) or {}
    if not isinstance(content, dict):
        raise ValueError(f"Config file {path} must contain a mapping.")
    unknown = set(content) - Config.field_names()
    if unknown:
        raise ValueError(
            f"Unknown keys in config file {path}: {', '.join(sorted(unknown))}"
        )
    try:
        return Config(**content)
    except pydantic.ValidationError as e:
        raise ValueError(f"Invalid config file {path}: {e}") from e
