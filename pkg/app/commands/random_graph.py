# app/commands/random_graph.py
from __future__ import annotations

from ..services.catalog import random_colored_graph
from .base import CommandRouter, arg, write_graph

router = CommandRouter()


@router.command(
    "random",
    help="seeded random colored graph (CGF output)",
    arguments=[
        arg("--dim", type=int, default=4),
        arg("--vertices", type=int, required=True),
        arg("--seed", type=int, required=True, help="mandatory: no wall-clock default"),
        arg("--output", "-o", default=None),
    ],
)
def random_(args, out) -> int:
    graph = random_colored_graph(args.dim, args.vertices, args.seed)
    info = write_graph(graph, out, args.output)
    if info:
        out.emit(info)
    return 0
