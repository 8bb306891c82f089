"""
Command-line entry point: `djinn <command> [options]`.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from loguru import logger

from djinn import __version__
from djinn.cli.commands import COMMANDS
from djinn.core.config import get_settings
from djinn.core.exceptions import DjinnError
from djinn.core.logging import configure_logging
from djinn.core.monitoring import RUN_INFO
from djinn.monitoring import export_metrics


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="djinn",
        description="Decision trees mapped to warm-started neural networks.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--log-level", help="override DJINN_LOG_LEVEL")
    parser.add_argument("--metrics", action="store_true", help="write Prometheus metrics after the run")
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="command")
    for command in COMMANDS:
        command.register(subparsers)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    settings = get_settings()
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.log_level or settings.LOG_LEVEL, settings.LOG_SERIALIZE)
    RUN_INFO.info({"version": __version__, "command": args.command, "environment": settings.ENVIRONMENT})

    try:
        repo = args.handler(args, settings)
        repo.commit()
        if args.metrics or settings.METRICS_ENABLED:
            export_metrics(Path(repo.root) / settings.METRICS_FILE)
    except DjinnError as exc:
        logger.error(f"{args.command} failed: {exc}")
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except Exception:
        logger.exception(f"{args.command} failed unexpectedly")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
