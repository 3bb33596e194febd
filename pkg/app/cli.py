from __future__ import annotations

import argparse
import logging
import sys
from typing import List, Optional, Sequence, TextIO

from pydantic import ValidationError

from .commands import catalog, census, check, connected_sum, genus, info, random_graph, verify
from .commands.base import CommandRouter, Output
from .core.config import global_settings as C
from .core.errors import CrystalError

logger = logging.getLogger(__name__)

ROUTERS: List[CommandRouter] = [
    info.router,
    genus.router,
    check.router,
    connected_sum.router,
    verify.router,
    census.router,
    catalog.router,
    random_graph.router,
]


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default=None,
                        help=f"output format (default: {C.OUTPUT_FORMAT})")
    common.add_argument("--jobs", type=int, default=None,
                        help=f"worker count for genus / enumerate (default: {C.DEFAULT_JOBS})")
    common.add_argument("--verbose", "-v", action="store_true", help="debug logging on stderr")
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crystal4",
        description="Crystallizations of PL 4-manifolds: residue counts, regular genus, certificates",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    common = _common_options()
    for router in ROUTERS:
        for spec in router.commands:
            p = sub.add_parser(spec.name, help=spec.help, description=spec.help, parents=[common])
            for a in spec.arguments:
                p.add_argument(*a.flags, **a.options)
            p.set_defaults(handler=spec.handler)
    return parser


def _setup_logging(verbose: bool) -> None:
    level = logging.DEBUG if verbose else getattr(logging, C.LOG_LEVEL.upper(), logging.INFO)
    logging.basicConfig(level=level, format=C.LOG_FORMAT, stream=sys.stderr, force=True)


def run(argv: Optional[Sequence[str]] = None, stdout: Optional[TextIO] = None) -> int:
    """exit code: 0 = 모든 검사 통과, 1 = 검사 실패 / 판정 불가, 2 = 입력 오류"""
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
    except SystemExit as e:
        return int(e.code or 0)

    _setup_logging(args.verbose)
    if args.jobs is not None and args.jobs < 1:
        print("error[ConfigInvalid]: --jobs must be >= 1", file=sys.stderr)
        return 2

    out = Output(args.format or C.OUTPUT_FORMAT, stdout or sys.stdout)
    try:
        return args.handler(args, out)
    except CrystalError as e:
        print(e.one_line(), file=sys.stderr)
        return 2
    except ValidationError as e:
        first = e.errors()[0]
        print(f"error[Validation]: {first.get('loc')} {first.get('msg')}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"error[IO]: {e}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
