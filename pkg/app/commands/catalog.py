# app/commands/catalog.py
from __future__ import annotations

from ..core.config import global_settings as C
from ..services.catalog import verify_catalog
from .base import CommandRouter, arg

router = CommandRouter()


@router.command(
    "verify-catalog",
    help="cross-check every catalog row that carries a graph",
    arguments=[arg("manifest", nargs="?", default=None, help="catalog JSON (default: CATALOG_MANIFEST)")],
)
def verify_catalog_(args, out) -> int:
    rows = verify_catalog(args.manifest or C.CATALOG_MANIFEST)
    passed = all(r.passed for r in rows)
    out.emit({
        "rows": [r.model_dump(mode="json") for r in rows],
        "checked": sum(1 for r in rows if r.has_graph),
        "passed": passed,
    })
    return 0 if passed else 1
