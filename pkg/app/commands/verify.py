# app/commands/verify.py
from __future__ import annotations

from ..services.reports import verify_report
from .base import CommandRouter, arg, betti_arg, load_graph

router = CommandRouter()


@router.command(
    "verify",
    help="run every identity check (relations, Dehn-Sommerville, vertex identity, rho identity, linear system)",
    arguments=[
        arg("file", help="CGF file ('-' = stdin)"),
        arg("--rank", type=int, default=None, help="rank m (default: rank upper bound of the graph)"),
        arg("--betti", type=betti_arg, default=None, help="B0,B1,B2,B3,B4: adds the Novik-Swartz bound"),
    ],
)
def verify(args, out) -> int:
    graph = load_graph(args.file)
    report, passed = verify_report(graph, args.rank, args.betti)
    out.emit(report)
    return 0 if passed else 1
