"""Command-line front end: tables, oracle comparisons and the verify suite."""

from .app import main, run
from .commands import Table, TableRow, cmd_asym, cmd_exact, cmd_oracle, cmd_profile
from .config import BudgetExceeded, ConfigError, RunConfig, parse_range
from .output import load_schema
from .verify import CHECK_KEYS, CheckResult, cmd_verify

__all__ = [
    "BudgetExceeded", "CHECK_KEYS", "CheckResult", "ConfigError", "RunConfig", "Table",
    "TableRow", "cmd_asym", "cmd_exact", "cmd_oracle", "cmd_profile", "cmd_verify",
    "load_schema", "main", "parse_range", "run",
]
