# app/commands/info.py
from __future__ import annotations

from ..core.errors import ConfigInvalidError
from ..services.reports import info_report
from .base import CommandRouter, arg, betti_arg, load_graph

router = CommandRouter()


@router.command(
    "info",
    help="residue counts, f/h-vector, Euler characteristic, Dehn-Sommerville, manifold status",
    arguments=[
        arg("file", help="CGF file ('-' = stdin)"),
        arg("--betti", type=betti_arg, default=None, help="B0,B1,B2,B3,B4: adds the Novik-Swartz check"),
        arg("--rank", type=int, default=None, help="rank m for the Novik-Swartz check (default: B1, with --betti)"),
    ],
)
def info(args, out) -> int:
    if args.rank is not None and args.betti is None:
        raise ConfigInvalidError("--rank needs --betti")
    graph = load_graph(args.file)
    out.emit(info_report(graph, betti=args.betti, rank_m=args.rank))
    return 0
