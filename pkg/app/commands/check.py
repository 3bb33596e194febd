# app/commands/check.py
from __future__ import annotations

from ..services.reports import check_report
from .base import CommandRouter, arg, betti_arg, load_graph

router = CommandRouter()


@router.command(
    "check",
    help="weak semi-simple classification and genus certificate at rank m",
    arguments=[
        arg("file", help="CGF file ('-' = stdin)"),
        arg("--rank", type=int, required=True, help="rank m of the fundamental group"),
        arg("--betti", type=betti_arg, default=None, help="B0,B1,B2,B3,B4"),
    ],
)
def check(args, out) -> int:
    """인증서가 없으면 exit 1 (판정 불가)"""
    graph = load_graph(args.file)
    report = check_report(graph, args.rank, args.betti)
    out.emit(report)
    return 0 if report["certificate"] else 1
