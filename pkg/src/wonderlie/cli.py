"""Command-line entry point: ``wonderlie --algebra sl2 --suite dixmier``."""
from __future__ import annotations

import argparse
import sys

from .fitting import OrbitDataError
from .lie import LieAlgebraError, SchemaError
from .suites import SUITES, ConfigError, SuiteConfig, run_suite


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="wonderlie", description="Run exact check-suites on a Lie algebra or symmetric pair.")
    ap.add_argument("--algebra", required=True, help="catalog name (sl3, sp4, sl2-ltimes-sl2, sl5-pair) or JSON file")
    ap.add_argument("--suite", required=True, choices=SUITES)
    ap.add_argument("--max-degree", type=int, default=4, help="degree cap for kernel and decomposition searches")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--orbit-data", help="JSON list of orbit records")
    ap.add_argument("--out", help="write the report here instead of stdout")
    ap.add_argument("--format", choices=("json", "text"), default="json")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = SuiteConfig(args.algebra, args.suite, args.max_degree, args.seed, args.orbit_data, args.out)
        report = run_suite(cfg)
    except (ConfigError, SchemaError, OrbitDataError, LieAlgebraError, KeyError, FileNotFoundError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"wonderlie: error: {msg}", file=sys.stderr)
        return 2
    text = report.dumps() if args.format == "json" else report.text()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
