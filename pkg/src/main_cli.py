"""
Command-line entry point for hopf-smooth.

Runs one engine operation per subcommand and prints a deterministic JSON report
on stdout (a table with --pretty). Logs and progress bars go to stderr.

Usage:
    python -m src.main_cli groebner -i data/ideals/x2y2.json --order lex
    python -m src.main_cli smooth-check -i data/catalog/mu6.json --field Fp:5
    python -m src.main_cli centralise --example frobenius-twist --field Fp:2
    python -m src.main_cli sweep -i data/catalog/mu6.json --primes 2..97 --char0

Exit codes: 0 ok, 2 input error, 3 resource limit, 4 engine invariant violation.
"""

import argparse
import logging
import sys
import time
from typing import List, Optional

from src.cli.commands import COMMANDS
from src.cli.report import render, to_json
from src.fol import BUILDERS
from src.utils.config import default_limits, log_level
from src.utils.errors import HopfSmoothError

logger = logging.getLogger(__name__)

UNEXPECTED_EXIT_CODE = 4


def _common(parser: argparse.ArgumentParser):
    parser.add_argument("--field", type=str, default=None, help="Coefficient field: Q or Fp:p (default: the input's own field, Z read as Q).")
    parser.add_argument("--degree-limit", type=int, default=None, help="Maximum polynomial degree (overrides HOPFSMOOTH_DEGREE_LIMIT).")
    parser.add_argument("--json", action="store_true", help="Print the JSON report (the default).")
    parser.add_argument("--pretty", action="store_true", help="Print the report as a table instead of JSON.")
    parser.add_argument("--timings", action="store_true", help="Include wall-clock times in the report.")
    parser.add_argument("--progress", action="store_true", help="Show progress bars on stderr.")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hopf-smooth",
        description="Exact Gröbner bases, primary decomposition and smoothness of affine group schemes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_text in (
        ("groebner", "Reduced Gröbner basis of an ideal file."),
        ("dimension", "Krull dimension of the quotient ring."),
        ("primdec", "Primary decomposition."),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("-i", "--input", required=True, help="Ideal file (JSON).")
        if name == "groebner":
            p.add_argument("--order", type=str, default=None, help="Monomial order: grlex, lex or block:r.")
        _common(p)

    p = sub.add_parser("member", help="Ideal membership of a polynomial.")
    p.add_argument("-i", "--input", required=True, help="Ideal file (JSON).")
    p.add_argument("-f", "--poly", required=True, help="Polynomial to test.")
    _common(p)

    p = sub.add_parser("saturate", help="Saturation (I : f^∞) and its exponent.")
    p.add_argument("-i", "--input", required=True, help="Ideal file (JSON).")
    p.add_argument("-f", "--poly", required=True, help="Polynomial to saturate by.")
    _common(p)

    p = sub.add_parser("eliminate", help="Elimination ideal in the kept variables.")
    p.add_argument("-i", "--input", required=True, help="Ideal file (JSON).")
    p.add_argument("--keep", required=True, help="Comma-separated variables to keep.")
    p.add_argument("--lex", action="store_true", help="Use pure Lex instead of a block order.")
    _common(p)

    for name, help_text in (("hopf-check", "Check the Hopf axioms of a quadruple."), ("smooth-check", "Group and Lie dimension of a quadruple.")):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("-i", "--input", required=True, help="Quadruple file (JSON) or catalog name.")
        _common(p)

    p = sub.add_parser("centralise", help="Centraliser of points under an action, with its smoothness.")
    p.add_argument("-a", "--action", default=None, help="Action file (JSON).")
    p.add_argument("--example", default=None, help="Built-in action: natural, frobenius-twist or trivial.")
    p.add_argument("--full", action="store_true", help="Keep the full fixed locus of each point instead of its identity component.")
    _common(p)

    p = sub.add_parser("emit-formula", help="Print a bounded first-order formula.")
    p.add_argument("kind", choices=sorted(BUILDERS), help="Formula family.")
    p.add_argument("--d", type=int, default=None, help="Bound d.")
    p.add_argument("--n", type=int, default=None, help="Number of variables.")
    p.add_argument("--e", type=int, default=None, help="Dimension or monomial rank parameter.")
    p.add_argument("--r", type=int, default=None, help="Tensor power.")
    p.add_argument("--p", type=int, default=None, help="Characteristic for psi.")
    p.add_argument("-o", "--output", default=None, help="Write the formula text to this file.")
    _common(p)

    p = sub.add_parser("sweep", help="Smoothness across many characteristics.")
    p.add_argument("-i", "--input", default=None, help="Quadruple file (JSON) or catalog name.")
    p.add_argument("-a", "--action", default=None, help="Action file (JSON).")
    p.add_argument("--example", default=None, help="Per-prime template: frobenius-twist.")
    p.add_argument("--primes", default="2..97", help="Primes as a..b or p1,p2,... (default 2..97).")
    p.add_argument("--char0", action="store_true", help="Also run the characteristic-0 instance.")
    p.add_argument("--full", action="store_true", help="Skip the identity-component step.")
    _common(p)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Parse arguments, run one command and print its report; returns the exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)

    logging.basicConfig(
        level=log_level(),
        format="%(asctime)s - %(levelname)s - %(message)s",
        handlers=[logging.StreamHandler()],
    )

    try:
        limits = default_limits().with_degree_limit(args.degree_limit)
        started = time.perf_counter()
        payload = COMMANDS[args.command](args, limits)
        if args.timings and args.command != "sweep":
            payload["wall_time"] = round(time.perf_counter() - started, 6)
        sys.stdout.write(render(payload, pretty=args.pretty))
        logger.debug(f"✅ {args.command} done")
        return 0
    except HopfSmoothError as e:
        logger.error(f"❌ {e.code} [{e.stage}]: {e.message}")
        sys.stdout.write(to_json({"error": e.to_dict()}))
        return e.exit_code
    except ValueError as e:
        # configuration errors from the environment
        logger.error(f"❌ {e}")
        sys.stdout.write(to_json({"error": {"code": "INPUT_ERROR", "message": str(e), "stage": "config"}}))
        return 2
    except Exception as e:
        import traceback
        logger.error(f"❌ Error:\n{traceback.format_exc()}")
        sys.stdout.write(to_json({"error": {"code": "UNEXPECTED", "message": str(e), "stage": None}}))
        return UNEXPECTED_EXIT_CODE


if __name__ == "__main__":
    sys.exit(main())
