from __future__ import annotations

import logging
from itertools import combinations
from typing import Any, Dict, Optional, Tuple

from ..core.errors import NotAManifoldCrystallizationError
from ..core.models import BettiVector, ColoredGraph, GenusReportPayload, ManifoldState
from .colored_graph import g, is_bipartite, is_contracted
from .complex import (
    complex_report,
    dehn_sommerville_check,
    f_vector,
    h_vector_from_f,
    manifold_check,
    novik_swartz_check,
    vertex_identity_check,
)
from .genus import (
    classify,
    gagliardi_relation_check,
    genus_certificate,
    rank_upper_bound,
    regular_genus,
    rho_identity_check,
)
from .linear_system import verify_linear_system

logger = logging.getLogger(__name__)


def g_counts(graph: ColoredGraph) -> Dict[str, int]:
    """모든 색 집합 B 에 대한 g_B ("0,1,2" 키, 공집합은 "" = ν)"""
    out = {"": g(graph, ())}
    for size in range(1, graph.dim + 2):
        for colors in combinations(graph.colors, size):
            out[",".join(map(str, colors))] = g(graph, colors)
    return out


def info_report(
        graph: ColoredGraph,
        betti: Optional[BettiVector] = None,
        rank_m: Optional[int] = None,
) -> Dict[str, Any]:
    """그래프 정보 + K(Γ) 리포트 (f_vector, h_vector, euler_characteristic, dehn_sommerville,
    manifold_status, novik_swartz)"""
    payload: Dict[str, Any] = {
        "dim": graph.dim,
        "num_vertices": graph.num_vertices,
        "g_counts": g_counts(graph),
        "orientable": is_bipartite(graph),
        "contracted": is_contracted(graph),
    }
    payload.update(complex_report(graph, betti, rank_m).model_dump(mode="json"))
    return payload


def genus_report_payload(
        graph: ColoredGraph,
        rank_m: Optional[int] = None,
        betti: Optional[BettiVector] = None,
        jobs: Optional[int] = None,
) -> GenusReportPayload:
    """ε 별 2ρ 표. rank_m 이 주어지면 분류 / 인증서 / 선형계 검사까지 붙인다."""
    report = regular_genus(graph, jobs=jobs)
    payload = GenusReportPayload(
        rho_by_permutation={e.permutation.label: e.rho_times_two for e in report.entries},
        regular_genus_times_two=report.regular_genus_times_two,
        argmin_permutation=report.argmin.label,
        orientable=report.orientable,
    )
    if rank_m is None:
        return payload
    payload.classification = classify(graph, rank_m)
    payload.certificate = genus_certificate(graph, rank_m, betti)
    payload.linear_system = verify_linear_system(graph, rank_m).checks
    return payload


def check_report(graph: ColoredGraph, rank_m: int, betti: Optional[BettiVector] = None) -> Dict[str, Any]:
    classification = classify(graph, rank_m)
    certificate = genus_certificate(graph, rank_m, betti)
    return {
        "classification": classification.model_dump(mode="json"),
        "certificate": certificate.model_dump(mode="json") if certificate else None,
        "status": "certified" if certificate else "undetermined",
    }


def verify_report(
        graph: ColoredGraph,
        rank_m: Optional[int] = None,
        betti: Optional[BettiVector] = None,
) -> Tuple[Dict[str, Any], bool]:
    """항등식 검사 묶음. 반환: (리포트, 전체 통과 여부)"""
    rank_source = "argument"
    if rank_m is None:
        rank_m = rank_upper_bound(graph)
        rank_source = "rank_upper_bound"

    status = manifold_check(graph)
    if status.state == ManifoldState.NOT_MANIFOLD:
        raise NotAManifoldCrystallizationError(status.diagnostic)
    f = f_vector(graph)
    h = h_vector_from_f(f)
    gagliardi = gagliardi_relation_check(graph)
    dehn = dehn_sommerville_check(graph, f)
    rho = rho_identity_check(graph)
    linear = verify_linear_system(graph, rank_m)

    checks: Dict[str, bool] = {
        "gagliardi_relation": gagliardi.holds,
        "dehn_sommerville": dehn.holds,
        "vertex_identity": vertex_identity_check(graph),
        "rho_identity": rho.holds,
        "h_vector_sum": sum(h.entries) == graph.num_vertices,
    }
    checks.update({f"linear_system.{k}": v for k, v in linear.checks.items()})
    if betti is not None:
        checks["novik_swartz_bound"] = novik_swartz_check(graph, betti, rank_m).bound_holds

    passed = all(checks.values())
    report = {
        "rank_m": rank_m,
        "rank_source": rank_source,
        "manifold_status": status.model_dump(mode="json"),
        "checks": checks,
        "gagliardi_residuals": gagliardi.residuals,
        "dehn_sommerville_residuals": list(dehn.residuals),
        "rho_identity_residuals": rho.residuals,
        "passed": passed,
    }
    if not passed:
        logger.warning("verify: failed checks %s", [k for k, v in checks.items() if not v])
    return report, passed
