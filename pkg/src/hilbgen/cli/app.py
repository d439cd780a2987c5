"""argparse entry point: ``hilbgen {exact,asym,profile,oracle,verify}``."""

from __future__ import annotations

import argparse
import sys

from ..errors import HilbgenError
from .commands import cmd_asym, cmd_exact, cmd_oracle, cmd_profile
from .config import (
    COMMANDS, EXIT_BUDGET, EXIT_CONFIG, EXIT_INVARIANT, EXIT_OK, FORMATS,
    BudgetExceeded, ConfigError, RunConfig, default_precision, parse_range,
)
from .output import render_csv, render_json, table_document, verify_document
from .verify import CHECK_KEYS, cmd_verify

_TABLES = {"exact": cmd_exact, "asym": cmd_asym, "profile": cmd_profile, "oracle": cmd_oracle}
_RANGE_FLAGS = ("--n", "--m")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ConfigError(message)


def _join_negative_ranges(argv: list[str]) -> list[str]:
    """``--m -3..3`` would be read as an option; rewrite it as ``--m=-3..3``."""
    out: list[str] = []
    it = iter(argv)
    for arg in it:
        if arg in _RANGE_FLAGS:
            nxt = next(it, None)
            if nxt is None:
                out.append(arg)
            else:
                out.append(f"{arg}={nxt}")
        else:
            out.append(arg)
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hilbgen", description="Coefficients of g^2/eta^k and their asymptotics.")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--k", type=int, default=24)
    parser.add_argument("--n", default=None, help="A or A..B (default 0..10; 1..10 for asym/profile)")
    parser.add_argument("--m", default=None, help="A or A..B (default depends on the command)")
    parser.add_argument("--terms", type=int, default=3, help="Taylor terms N for asym")
    parser.add_argument("--precision", type=int, default=None, help="bits (env HILBGEN_PRECISION)")
    parser.add_argument("--samples", type=int, default=256, help="quadrature samples per direction")
    parser.add_argument("--format", choices=FORMATS, default="csv")
    parser.add_argument("--out", default=None, metavar="PATH")
    parser.add_argument("--skip", action="append", default=[], choices=CHECK_KEYS, metavar="NAME",
                        help=f"verify: skip a check ({', '.join(CHECK_KEYS)})")
    return parser


def config_from_args(argv: list[str]) -> RunConfig:
    ns = build_parser().parse_args(_join_negative_ranges(argv))
    if ns.n is not None:
        n_range = parse_range(ns.n)
    else:
        n_range = (1, 10) if ns.command in ("asym", "profile") else (0, 10)
    return RunConfig(
        command=ns.command,
        k=ns.k,
        n_range=n_range,
        m_range=parse_range(ns.m) if ns.m is not None else None,
        taylor_terms=ns.terms,
        precision_bits=ns.precision if ns.precision is not None else default_precision(),
        output_format=ns.format,
        output_path=ns.out,
        samples=ns.samples,
        skip=frozenset(ns.skip),
    )


def run(cfg: RunConfig) -> tuple[dict, str, int]:
    """Execute ``cfg``; return the document, its rendering and the exit code."""
    if cfg.command == "verify":
        results = cmd_verify(cfg)
        document = verify_document(results, cfg)
        code = EXIT_OK if document["passed"] else EXIT_INVARIANT
    else:
        document = table_document(_TABLES[cfg.command](cfg), cfg)
        code = EXIT_OK
    text = render_json(document) if cfg.output_format == "json" else render_csv(document)
    return document, text, code


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        cfg = config_from_args(argv)
        document, text, code = run(cfg)
    except ConfigError as exc:
        print(f"hilbgen: configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except BudgetExceeded as exc:
        print(f"hilbgen: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (HilbgenError, ValueError) as exc:
        print(f"hilbgen: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    if cfg.output_path:
        with open(cfg.output_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if code == EXIT_INVARIANT:
        failed = [c["name"] for c in document["checks"] if not c["passed"]]
        print(f"hilbgen: failed checks: {', '.join(failed)}", file=sys.stderr)
    return code
