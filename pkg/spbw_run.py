#!/usr/bin/env python3
"""
spbw run - command front end for skew PBW presentation files.
Front end de comandos para arquivos de apresentacao skew PBW.

Reads a `.spbw` file, runs the requested command(s) and prints the
deterministic report on stdout. Logs go to stderr.
Le um arquivo `.spbw`, roda o(s) comando(s) pedido(s) e imprime o
relatorio deterministico em stdout. Logs vao para stderr.

Exit codes / Codigos de saida:
    0 ok, 1 mathematical failure, 2 input error, 3 resource guard
"""


import argparse
import sys
import time
from datetime import datetime, timezone
from pathlib import Path

from rich.console import Console
from rich.table import Table

from spbw import __version__
from spbw.core import (
    get_config,
    create_run_dirs,
    generate_run_id,
    get_logger,
    write_meta,
    write_report,
    SpbwError,
)
from spbw.core.errors import EXIT_INPUT_ERROR
from spbw.core.log import setup_file_logging, close_file_logging, set_level
from spbw.dsl import (
    CommandRunner,
    RunOptions,
    build,
    overall_exit,
    parse_file,
    parse_order_clause,
    render_report,
    select_commands,
)
from spbw.dsl.commands import REPORT_HEADER, VERBS

logger = get_logger("spbw_run")

SCHEMA_VERSION = "1.0"


def run_file(args, config) -> tuple:
    """
    Parses, builds and runs; returns (report text, exit code, outcomes).
    Faz parse, constroi e executa; retorna (relatorio, codigo de saida, resultados).
    """
    path = Path(args.file)
    try:
        file = parse_file(path)
        order = parse_order_clause(args.order) if args.order else None
        ws = build(file, order=order, module_scheme=args.module_order)
        commands = select_commands(ws, args.command, args.args)
    except SpbwError as exc:
        logger.error(f"Input rejected: {exc}")
        text = f"{REPORT_HEADER}\n# file: {path.name}\nerror: {exc}\n"
        return text, exc.exit_code, []
    except OSError as exc:
        logger.error(f"Cannot read {path}: {exc}")
        text = f"{REPORT_HEADER}\n# file: {path.name}\nerror: cannot read file\n"
        return text, EXIT_INPUT_ERROR, []

    guard = config.guard().merged(max_basis=args.max_basis, max_degree=args.max_degree)
    options = RunOptions(
        trace=args.trace,
        pairs_only=args.pairs_only,
        subset_cap=config.subset_cap,
        guard=guard,
    )
    logger.info(f"Running {len(commands)} command(s) from {path.name}")
    outcomes = CommandRunner(ws, options).run_all(commands)
    return render_report(file.source, outcomes), overall_exit(outcomes), outcomes


def print_summary(args, outcomes, exit_code: int, elapsed: float) -> None:
    """Run summary table on stderr."""
    table = Table(title=f"spbw {args.command} {Path(args.file).name}")
    table.add_column("command")
    table.add_column("status")
    table.add_column("exit", justify="right")
    for outcome in outcomes:
        table.add_row(outcome.command, outcome.status, str(outcome.exit_code))
    table.add_section()
    table.add_row("total", "ok" if exit_code == 0 else "failed", str(exit_code))
    console = Console(stderr=True)
    console.print(table)
    console.print(f"elapsed: {elapsed:.3f}s")


def main(argv=None):
    parser = argparse.ArgumentParser(
        description="spbw - Groebner bases over skew PBW extensions",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Validate the presentation
  python spbw_run.py validate corpus/diffusion.spbw

  # Run the division declared in the file, one line per step
  python spbw_run.py divide corpus/diffusion.spbw --trace

  # Ad-hoc division
  python spbw_run.py divide corpus/diffusion.spbw f by f1 f2 f3

  # Every command of the file, artifacts saved
  python spbw_run.py run corpus/r_algebra.spbw --save --summary
        """,
    )

    parser.add_argument(
        "command",
        choices=list(VERBS) + ["run"],
        help="Command to run (run = every command of the file)",
    )

    parser.add_argument(
        "file",
        type=str,
        help="Presentation file (.spbw)",
    )

    parser.add_argument(
        "args",
        nargs="*",
        help="Ad-hoc arguments; replaces the file's commands of that verb",
    )

    parser.add_argument("--order", type=str, default=None, help="Override the order, e.g. 'deglex D2 > D1'")

    parser.add_argument(
        "--module-order",
        type=str,
        default=None,
        choices=["top", "toprev"],
        help="Override the module order",
    )

    parser.add_argument("--trace", action="store_true", help="One line per reduction step")

    parser.add_argument("--pairs-only", action="store_true", help="Only subsets of size <= 2 (field coefficients)")

    parser.add_argument("--max-degree", type=int, default=None, help="Resource guard on element degree")

    parser.add_argument("--max-basis", type=int, default=None, help="Resource guard on basis size")

    parser.add_argument("--save", action="store_true", help="Save report, meta.json and session log")

    parser.add_argument("--summary", action="store_true", help="Print a summary table on stderr")

    parser.add_argument("--version", action="version", version=f"spbw {__version__}")

    args = parser.parse_args(argv)

    # Load configuration
    try:
        config = get_config()
    except SpbwError as exc:
        logger.error(f"Configuration error: {exc}")
        return exc.exit_code
    set_level(config.log_level)
    get_logger("spbw", config.log_level)

    for name in ("max_degree", "max_basis"):
        value = getattr(args, name)
        if value is not None and value < 1:
            logger.error(f"--{name.replace('_', '-')} must be a positive integer")
            return EXIT_INPUT_ERROR

    dirs = None
    run_id = None
    if args.save:
        run_id = generate_run_id()
        dirs = create_run_dirs(config.artifacts_dir, run_id)
        setup_file_logging(dirs["logs"] / "session.log", config.log_level)
        logger.info(f"Run ID: {run_id}")
        logger.info(f"Run dir: {dirs['run']}")

    started_at = datetime.now(timezone.utc).isoformat()
    started = time.perf_counter()

    report, exit_code, outcomes = run_file(args, config)
    elapsed = time.perf_counter() - started

    sys.stdout.write(report)
    sys.stdout.flush()

    if dirs is not None:
        report_path = write_report(dirs, f"{Path(args.file).stem}_{args.command}", report)
        meta = {
            "schema_version": SCHEMA_VERSION,
            "run_id": run_id,
            "started_at": started_at,
            "file": str(args.file),
            "command": args.command,
            "args": list(args.args),
            "flags": {
                "order": args.order,
                "module_order": args.module_order,
                "trace": args.trace,
                "pairs_only": args.pairs_only,
                "max_degree": args.max_degree,
                "max_basis": args.max_basis,
            },
            "exit_code": exit_code,
            "elapsed_seconds": round(elapsed, 6),
            "commands": [{"command": o.command, "exit_code": o.exit_code} for o in outcomes],
            "report": report_path.name,
        }
        meta_path = write_meta(dirs, meta)
        logger.info(f"Meta saved: {meta_path}")
        close_file_logging()

    if args.summary:
        print_summary(args, outcomes, exit_code, elapsed)

    return exit_code


if __name__ == "__main__":
    sys.exit(main())
