from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import List, Optional

from app.cli.commands import COMMANDS
from app.core.config import settings
from app.core.errors import SternError

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sternlab", description=f"{settings.APP_NAME}: Stern polynomials and their congruences")
    parser.add_argument("--log-level", default=None, help=f"logging level (default {settings.LOG_LEVEL})")
    sub = parser.add_subparsers(dest="command", metavar="<command>")
    sub.required = True
    for command in COMMANDS:
        command.register(sub)
    return parser


def _configure_logging(level: Optional[str]) -> None:
    logging.basicConfig(
        level=(level or settings.LOG_LEVEL).upper(),
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args.log_level)
    try:
        return args.handler(args)
    except SternError as e:
        logger.debug("command %s failed", args.command, exc_info=True)
        sys.stderr.write(json.dumps(e.payload(), ensure_ascii=False) + "\n")
        return e.exit_code
