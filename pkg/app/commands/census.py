# app/commands/census.py
from __future__ import annotations

from ..services import cgf
from ..services.enumerator import census, make_config
from .base import CommandRouter, arg, nonnegative_int

router = CommandRouter()


@router.command(
    "enumerate",
    help="census of contracted colored graphs up to vertex relabeling (json: JSON lines, text: CGF blocks)",
    arguments=[
        arg("--vertices", type=int, required=True, help="number of vertices (even)"),
        arg("--dim", type=int, default=None, help="dimension d (2..4)"),
        arg("--no-contracted", action="store_true", help="do not require contractedness"),
        arg("--no-level3", action="store_true", help="do not require 3-residues to be 2-spheres"),
        arg("--bipartite", action="store_true", help="only bipartite (orientable) graphs"),
        arg("--max-results", type=nonnegative_int, default=None),
    ],
)
def enumerate_(args, out) -> int:
    config = make_config(
        args.vertices,
        args.dim,
        require_contracted=not args.no_contracted,
        require_level3_spheres=not args.no_level3,
        require_bipartite=args.bipartite,
        max_results=args.max_results,
        jobs=args.jobs,
    )
    first = True
    for entry in census(config):
        if out.format == "text":
            if not first:
                out.raw("\n")
            out.raw(cgf.serialize(entry.graph))
        else:
            out.emit_line({
                "canonical_form": entry.canonical_form,
                "num_vertices": entry.graph.num_vertices,
                "manifold_status": entry.manifold_status.value,
                "bipartite": entry.bipartite,
                "matchings": [list(m) for m in entry.graph.matchings],
            })
        first = False
    return 0
