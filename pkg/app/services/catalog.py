from __future__ import annotations

import json
import logging
import os
from pathlib import Path
from typing import List, Union

import numpy as np
from pydantic import ValidationError

from ..core.config import global_settings as C
from ..core.errors import CatalogError, ConfigInvalidError, CrystalError
from ..core.models import CatalogEntry, CatalogRowCheck, ColoredGraph, ManifoldState
from ..core.unionfind import count_components
from . import cgf
from .colored_graph import connected_sum
from .complex import euler_characteristic, manifold_check, vertex_identity_check
from .genus import gagliardi_relation_check, genus_certificate, genus_lower_bound, rank_upper_bound

logger = logging.getLogger(__name__)

REFERENCE_SOURCE = "manifolds known to attain the bound 2*chi + 5*m - 4"


# ===============================
# 생성기
# ===============================

def sphere(d: int) -> ColoredGraph:
    """정점 2개, 모든 색이 두 정점을 잇는 유일한 그래프"""
    if d < 2:
        raise ValueError(f"sphere needs d >= 2 (got {d})")
    return ColoredGraph(dim=d, num_vertices=2, matchings=tuple((1, 0) for _ in range(d + 1)))


def sum_power(graph: ColoredGraph, k: int) -> ColoredGraph:
    """k 겹 연결합. 정점 규칙: 매번 두 피연산자의 정점 0 (가장 작은 번호)."""
    if k < 1:
        raise ValueError(f"sum_power needs k >= 1 (got {k})")
    out = graph
    for _ in range(k - 1):
        out = connected_sum(out, 0, graph, 0)
    return out


def random_involution(rng: np.random.Generator, nu: int) -> tuple:
    """균등 무작위 고정점 없는 involution (무작위 순열을 연속 쌍으로 묶음)"""
    order = rng.permutation(nu)
    partner = [0] * nu
    for a, b in zip(order[0::2], order[1::2]):
        partner[int(a)], partner[int(b)] = int(b), int(a)
    return tuple(partner)


def random_colored_graph(d: int, nu: int, seed: int) -> ColoredGraph:
    """seed 고정이면 항상 같은 그래프. 연결될 때까지 다시 뽑는다 (contracted/다양체 보장 없음)."""
    if nu < 2 or nu % 2:
        raise ConfigInvalidError(f"nu must be even and >= 2 (got {nu})")
    rng = np.random.default_rng(seed)
    for attempt in range(C.RANDOM_MAX_RESAMPLE):
        matchings = tuple(random_involution(rng, nu) for _ in range(d + 1))
        if count_components(matchings, nu) == 1:
            if attempt:
                logger.debug("random graph (d=%d, nu=%d, seed=%d): %d resamples", d, nu, seed, attempt)
            return ColoredGraph(dim=d, num_vertices=nu, matchings=matchings)
    raise CatalogError(
        f"no connected graph after {C.RANDOM_MAX_RESAMPLE} samples (d={d}, nu={nu}, seed={seed})"
    )


# ===============================
# 참조 표
# ===============================

_REFERENCE_ROWS = (
    ("S^4", 2, 0),
    ("CP^2", 3, 0),
    ("S^2 x S^2", 4, 0),
    ("RP^4", 1, 1),
    ("RP^2 x S^2", 2, 1),
    ("S^3-bundles over S^1", 0, 1),
    ("(S^2 x S^1)_f", 0, 2),
    ("K3", 24, 0),
)


def reference_table() -> List[CatalogEntry]:
    """S^4 행만 실제 그래프를 가진다. 나머지는 외부 CGF 파일 자리만 둔다."""
    rows = []
    for name, chi, m in _REFERENCE_ROWS:
        rows.append(
            CatalogEntry(
                name=name,
                chi=chi,
                rank_m=m,
                known_genus=genus_lower_bound(chi, m),
                source=REFERENCE_SOURCE,
                graph=sphere(4) if name == "S^4" else None,
            )
        )
    return rows


def load_manifest(path: Union[str, os.PathLike]) -> List[CatalogEntry]:
    """JSON manifest -> CatalogEntry 목록. cgf_path 는 manifest 파일 기준 상대 경로."""
    p = Path(path).expanduser()
    try:
        raw = json.loads(p.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as e:
        raise CatalogError(f"cannot read catalog manifest {p}: {e}") from e

    rows = raw.get("rows", raw) if isinstance(raw, dict) else raw
    if not isinstance(rows, list):
        raise CatalogError("catalog manifest must be a list of rows or {'rows': [...]}")

    entries: List[CatalogEntry] = []
    for i, row in enumerate(rows):
        try:
            entry = CatalogEntry.model_validate(row)
        except ValidationError as e:
            raise CatalogError(f"row {i}: {e.errors()[0]['msg']}") from e
        if entry.cgf_path:
            cgf_file = (p.parent / entry.cgf_path).resolve()
            try:
                graph = cgf.load(cgf_file)
            except OSError as e:
                raise CatalogError(f"row {entry.name!r}: cannot read {cgf_file}: {e}") from e
            entry = entry.model_copy(update={"graph": graph})
        entries.append(entry)
    logger.info("loaded %d catalog rows from %s", len(entries), p)
    return entries


def check_row(entry: CatalogEntry) -> CatalogRowCheck:
    checks = {}
    if entry.known_genus is not None:
        checks["known_genus_is_lower_bound"] = entry.known_genus == genus_lower_bound(entry.chi, entry.rank_m)

    graph = entry.graph
    if graph is None:
        return CatalogRowCheck(name=entry.name, has_graph=False, checks=checks, message="no graph")

    try:
        checks["chi_matches"] = euler_characteristic(graph) == entry.chi
        checks["rank_consistent"] = entry.rank_m <= rank_upper_bound(graph)
        checks["manifold_verified"] = manifold_check(graph).state == ManifoldState.VERIFIED
        checks["vertex_identity"] = vertex_identity_check(graph)
        checks["gagliardi_relation"] = gagliardi_relation_check(graph).holds
        cert = genus_certificate(graph, entry.rank_m) if checks["rank_consistent"] else None
        checks["certified"] = cert is not None
        if cert is not None and entry.known_genus is not None:
            checks["certificate_matches_known_genus"] = cert.genus == entry.known_genus
    except CrystalError as e:
        checks["preconditions"] = False
        return CatalogRowCheck(name=entry.name, has_graph=True, checks=checks, message=e.one_line())

    failed = [k for k, v in checks.items() if not v]
    message = "ok" if not failed else "failed: " + ", ".join(failed)
    return CatalogRowCheck(name=entry.name, has_graph=True, checks=checks, message=message)


def verify_catalog(path: Union[str, os.PathLike]) -> List[CatalogRowCheck]:
    return [check_row(entry) for entry in load_manifest(path)]
