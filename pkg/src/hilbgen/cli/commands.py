"""Table-producing subcommands."""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

from ..asym import beta, corollary_diff, log_ratio, profile_window, theorem1_estimate, theorem2_ratio
from ..asym.xfloat import context
from ..contour import ContourConfig, contour_row
from ..errors import RangeExceeded
from ..genfun import a, a_row, p_colored
from .config import EXACT_BUDGET, ORACLE_BUDGET, BudgetExceeded, ConfigError, RunConfig

CORE_COLUMNS = ("n", "m", "exact_value", "estimate", "ratio", "relative_error", "beta_k")


@dataclass
class TableRow:
    n: int
    m: int
    exact_value: str
    estimate: object = None
    ratio: object = None
    relative_error: object = None
    beta_k: object = None
    extra: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        out = {c: getattr(self, c) for c in CORE_COLUMNS}
        out.update(self.extra)
        return out


@dataclass
class Table:
    command: str
    columns: tuple[str, ...]
    rows: list[TableRow]
    summary: list[dict] = field(default_factory=list)


def _check_budget(cfg: RunConfig, limit: int, what: str) -> None:
    if cfg.n_range[1] > limit:
        raise BudgetExceeded(f"n={cfg.n_range[1]} exceeds the {what} budget of {limit}")


def _require_positive_n(cfg: RunConfig) -> None:
    if cfg.n_range[0] < 1:
        raise ConfigError(f"{cfg.command} needs n >= 1")


def _symmetric(n: int) -> tuple[int, int]:
    return -n, n


def cmd_exact(cfg: RunConfig) -> Table:
    """a_{m,k}(n) on the grid, with p_k(n) and the sum-rule status per n."""
    _check_budget(cfg, EXACT_BUDGET, "exact")
    rows = []
    for n in cfg.n_values:
        full = a_row(cfg.k, n)
        p = p_colored(cfg.k, n)
        status = "ok" if sum(full.values()) == p else "fail"
        for m in cfg.m_values(_symmetric(cfg.n_range[1])):
            rows.append(TableRow(n, m, str(full.get(m, 0)),
                                 extra={"p_k": str(p), "sum_rule": status}))
    return Table("exact", CORE_COLUMNS + ("p_k", "sum_rule"), rows)


def cmd_asym(cfg: RunConfig) -> Table:
    """Exact values against the truncated Bessel expansion.

    Pair columns match every m with the reference m_ref of smallest |m|
    in the range (ties to the non-negative one); ``pair_ratio`` is
    (a(m_ref) - a(m)) divided by its leading-order estimate.
    """
    _require_positive_n(cfg)
    _check_budget(cfg, EXACT_BUDGET, "exact")
    ms = list(cfg.m_values((0, 0)))
    ref = min(ms, key=lambda m: (abs(m), m < 0))
    prec = cfg.precision_bits
    rows = []
    for n in cfg.n_values:
        b = beta(cfg.k, n, prec)
        exact_ref = a(ref, cfg.k, n)
        for m in ms:
            exact = a(m, cfg.k, n)
            est = theorem1_estimate(m, cfg.k, n, cfg.taylor_terms, prec)
            ratio = log_ratio(est, exact, prec) if exact else None
            extra = {"pair_ref": None, "pair_ratio": None}
            if m * m != ref * ref:
                diff = exact_ref - exact
                extra["pair_ref"] = ref
                if diff:
                    extra["pair_ratio"] = 1 / log_ratio(corollary_diff(ref, m, cfg.k, n, prec),
                                                             diff, prec)
            rows.append(TableRow(n, m, str(exact), est, ratio,
                                 None if ratio is None else ratio - 1, b, extra))
    return Table("asym", CORE_COLUMNS + ("pair_ref", "pair_ratio"), rows)


def cmd_profile(cfg: RunConfig) -> Table:
    """a/p_k against the limiting profile, flagged outside the m-window.

    ``estimate`` is P(m, beta_k) p_k(n), so ``ratio`` compares the profile
    with a_{m,k}(n) directly; ``deviation`` is (a/p_k) / P - 1.  The default
    m-range is the window at the largest n.  The summary holds one row per
    n with the largest in-window |deviation|.
    """
    _require_positive_n(cfg)
    _check_budget(cfg, EXACT_BUDGET, "exact")
    reach = math.floor(profile_window(cfg.k, cfg.n_range[1]))
    rows, summary = [], []
    for n in cfg.n_values:
        p = p_colored(cfg.k, n)
        worst = None
        for m in cfg.m_values((-reach, reach)):
            with warnings.catch_warnings():
                warnings.simplefilter("ignore", RangeExceeded)
                pr = theorem2_ratio(m, cfg.k, n, cfg.precision_bits)
            exact = a(m, cfg.k, n)
            estimate = pr.profile_value * p
            ratio = log_ratio(estimate, exact, cfg.precision_bits) if exact else None
            rows.append(TableRow(n, m, str(exact), estimate, ratio,
                                 None if ratio is None else ratio - 1, pr.beta_k,
                                 {"exact_ratio": pr.exact_ratio, "profile_value": pr.profile_value,
                                  "deviation": pr.relative_deviation, "in_window": pr.in_window}))
            if pr.in_window and (worst is None or abs(pr.relative_deviation) > worst):
                worst = abs(pr.relative_deviation)
        summary.append({"n": n, "max_window_deviation": worst})
    columns = CORE_COLUMNS + ("exact_ratio", "profile_value", "deviation", "in_window")
    return Table("profile", columns, rows, summary)


def cmd_oracle(cfg: RunConfig) -> Table:
    """Contour quadrature beside the exact integers.

    ``self_consistency`` is |value(S) - value(2S)| for S = --samples in
    both directions.
    """
    _check_budget(cfg, ORACLE_BUDGET, "oracle")
    rows = []
    ctx = context(cfg.precision_bits)
    for n in cfg.n_values:
        ms = list(cfg.m_values(_symmetric(n)))
        base = ContourConfig(k=cfg.k, n=n, samples_w=cfg.samples, samples_u=cfg.samples)
        coarse = contour_row(base, ms, check=False)
        fine = contour_row(base.doubled(), ms, check=False)
        for m in ms:
            exact = a(m, cfg.k, n)
            value = fine[m]
            diff = abs(value - exact)
            ratio = ctx.mpf(value) / exact if exact else None
            rows.append(TableRow(
                n, m, str(exact), value, ratio, None if ratio is None else ratio - 1,
                base.radius_beta,
                {"abs_diff": diff, "rel_diff": diff / abs(exact) if exact else None,
                 "self_consistency": abs(fine[m] - coarse[m]), "samples": 2 * cfg.samples}))
    return Table("oracle", CORE_COLUMNS + ("abs_diff", "rel_diff", "self_consistency", "samples"),
                 rows)
