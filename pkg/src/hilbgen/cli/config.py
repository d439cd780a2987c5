"""Run configuration for the command-line front end."""

from __future__ import annotations

import os
import re
from dataclasses import dataclass, field

from ..errors import HilbgenError

COMMANDS = ("exact", "asym", "profile", "oracle", "verify")
FORMATS = ("csv", "json")

MAX_TAYLOR_TERMS = 12
EXACT_BUDGET = 1000  # largest n for the exact tables
ORACLE_BUDGET = 40  # largest n the contour oracle is run at

EXIT_OK = 0
EXIT_INVARIANT = 1
EXIT_CONFIG = 2
EXIT_BUDGET = 3


class ConfigError(HilbgenError):
    """Invalid command-line configuration (exit code 2)."""


class BudgetExceeded(HilbgenError):
    """Requested work beyond a configured budget (exit code 3)."""


_RANGE = re.compile(r"^\s*(-?\d+)\s*(?:\.\.\s*(-?\d+)\s*)?$")


def parse_range(text: str) -> tuple[int, int]:
    """``"3"`` -> (3, 3); ``"-3..3"`` -> (-3, 3)."""
    match = _RANGE.match(text)
    if not match:
        raise ConfigError(f"cannot parse range {text!r}; expected A or A..B")
    lo = int(match.group(1))
    hi = int(match.group(2)) if match.group(2) is not None else lo
    if hi < lo:
        raise ConfigError(f"empty range {text!r}")
    return lo, hi


def default_precision() -> int:
    raw = os.environ.get("HILBGEN_PRECISION")
    if raw is None:
        return 256
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(f"HILBGEN_PRECISION={raw!r} is not an integer") from None
    return value


@dataclass(frozen=True)
class RunConfig:
    command: str
    k: int = 24
    n_range: tuple[int, int] = (0, 10)
    m_range: tuple[int, int] | None = None  # None: command-specific default
    taylor_terms: int = 3
    precision_bits: int = 256
    output_format: str = "csv"
    output_path: str | None = None
    samples: int = 256
    skip: frozenset[str] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ConfigError(f"unknown command {self.command!r}")
        if self.k < 1:
            raise ConfigError("k must be positive")
        for name, rng in (("n", self.n_range), ("m", self.m_range)):
            if rng is not None and rng[1] < rng[0]:
                raise ConfigError(f"{name} range is empty")
        if self.n_range[0] < 0:
            raise ConfigError("n must be non-negative")
        if not 1 <= self.taylor_terms <= MAX_TAYLOR_TERMS:
            raise ConfigError(f"--terms must lie in 1..{MAX_TAYLOR_TERMS}")
        if self.precision_bits < 53:
            raise ConfigError("precision must be at least 53 bits")
        if self.output_format not in FORMATS:
            raise ConfigError(f"unknown format {self.output_format!r}")
        if self.samples < 4 or self.samples & (self.samples - 1):
            raise ConfigError("--samples must be a power of two >= 4")

    @property
    def n_values(self) -> range:
        return range(self.n_range[0], self.n_range[1] + 1)

    def m_values(self, default: tuple[int, int]) -> range:
        lo, hi = self.m_range if self.m_range is not None else default
        return range(lo, hi + 1)

    def as_dict(self) -> dict:
        return {
            "command": self.command,
            "k": self.k,
            "n_range": list(self.n_range),
            "m_range": list(self.m_range) if self.m_range is not None else None,
            "taylor_terms": self.taylor_terms,
            "precision_bits": self.precision_bits,
            "samples": self.samples,
            "skip": sorted(self.skip),
        }
