# app/commands/genus.py
from __future__ import annotations

from ..core.errors import ConfigInvalidError
from ..services.reports import genus_report_payload
from .base import CommandRouter, arg, betti_arg, load_graph

router = CommandRouter()


@router.command(
    "genus",
    help="regular genus report (2*rho per cyclic permutation)",
    arguments=[
        arg("file", help="CGF file ('-' = stdin)"),
        arg("--rank", type=int, default=None, help="rank m: adds classification, certificate, linear system"),
        arg("--betti", type=betti_arg, default=None, help="B0,B1,B2,B3,B4 (with --rank)"),
    ],
)
def genus(args, out) -> int:
    if args.betti is not None and args.rank is None:
        raise ConfigInvalidError("--betti needs --rank")
    graph = load_graph(args.file)
    payload = genus_report_payload(graph, rank_m=args.rank, betti=args.betti, jobs=args.jobs)
    out.emit(payload.model_dump(mode="json"))
    return 0
