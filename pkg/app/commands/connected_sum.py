# app/commands/connected_sum.py
from __future__ import annotations

from ..services.colored_graph import connected_sum
from .base import CommandRouter, arg, load_graph, nonnegative_int, write_graph

router = CommandRouter()


@router.command(
    "sum",
    help="graph connected sum of two CGF files (CGF output)",
    arguments=[
        arg("file1"),
        arg("file2"),
        arg("--v1", type=nonnegative_int, default=0, help="vertex removed from the first graph"),
        arg("--v2", type=nonnegative_int, default=0, help="vertex removed from the second graph"),
        arg("--output", "-o", default=None, help="write CGF to this path instead of stdout"),
    ],
)
def sum_(args, out) -> int:
    g1 = load_graph(args.file1)
    g2 = load_graph(args.file2)
    summed = connected_sum(g1, args.v1, g2, args.v2)
    info = write_graph(summed, out, args.output)
    if info:
        out.emit(info)
    return 0
