from __future__ import annotations

import logging
from functools import partial
from itertools import combinations, permutations
from typing import Dict, List, Optional, Sequence, Tuple, Union

from ..core.config import global_settings as C
from ..core.errors import (
    DimMismatchError,
    NotAManifoldCrystallizationError,
    NotAPermutationError,
    NotContractedError,
    RankInconsistentError,
    UncertifiedError,
    UnsupportedDimensionError,
)
from ..core.models import (
    AdditivityReport,
    BettiVector,
    Certificate,
    CertificateRoute,
    Classification,
    ClassificationKind,
    ColoredGraph,
    CyclicPermutation,
    GenusReport,
    ManifoldState,
    PermutationGenus,
    TripleCheck,
)
from ..core.runtime import runtime
from .colored_graph import connected_sum, g, is_bipartite, is_contracted, relabel
from .complex import euler_characteristic, manifold_check, novik_swartz_check

logger = logging.getLogger(__name__)

EpsLike = Union[CyclicPermutation, Sequence[int]]


def _key(colors: Sequence[int]) -> str:
    return ",".join(str(c) for c in sorted(colors))


def _require_dim4(graph: ColoredGraph, what: str) -> None:
    if graph.dim != 4:
        raise UnsupportedDimensionError(f"{what} is defined for dim 4 only (got dim {graph.dim})")


# ===============================
# 순환 배열 ε
# ===============================

def canonicalize(arrangement: Sequence[int]) -> CyclicPermutation:
    """회전/반사 몫의 대표원: 마지막 원소가 d, 그리고 ε_0 < ε_{d-1}"""
    order = tuple(int(c) for c in arrangement)
    d = len(order) - 1
    if d < 2 or sorted(order) != list(range(d + 1)):
        raise NotAPermutationError(f"{order} is not an arrangement of 0..{d}")
    at = order.index(d)
    rotated = order[at + 1:] + order[: at + 1]
    if rotated[0] > rotated[d - 1]:
        rotated = tuple(reversed(rotated[:d])) + (d,)
    return CyclicPermutation(order=rotated)


def cyclic_permutations(d: int) -> List[CyclicPermutation]:
    """d!/2 개의 대표원, 사전식 순서"""
    if d < 2:
        raise UnsupportedDimensionError(f"cyclic permutations need d >= 2 (got {d})")
    return [
        CyclicPermutation(order=p + (d,))
        for p in permutations(range(d))
        if p[0] < p[-1]
    ]


def _as_order(eps: EpsLike) -> Tuple[int, ...]:
    return eps.order if isinstance(eps, CyclicPermutation) else tuple(int(c) for c in eps)


def adjacent_pairs(eps: EpsLike) -> List[Tuple[int, int]]:
    o = _as_order(eps)
    n = len(o)
    return [tuple(sorted((o[i], o[(i + 1) % n]))) for i in range(n)]


def consecutive_triples(eps: EpsLike) -> List[Tuple[int, int, int]]:
    o = _as_order(eps)
    n = len(o)
    return [tuple(sorted((o[i], o[(i + 1) % n], o[(i + 2) % n]))) for i in range(n)]


def skip_triples(eps: EpsLike) -> List[Tuple[int, int, int]]:
    """{ε_i, ε_{i+2}, ε_{i+4}}"""
    o = _as_order(eps)
    n = len(o)
    return [tuple(sorted((o[i], o[(i + 2) % n], o[(i + 4) % n]))) for i in range(n)]


# ===============================
# χ_ε, ρ_ε, ρ(Γ)
# ===============================

def rho_eps(graph: ColoredGraph, eps: EpsLike) -> PermutationGenus:
    """χ_ε = Σ g_{ε_i ε_{i+1}} + (1-d) ν/2,  2ρ_ε = 2 - χ_ε"""
    order = _as_order(eps)
    if len(order) != graph.dim + 1 or sorted(order) != list(graph.colors):
        raise DimMismatchError(f"{order} is not a cyclic order of the {graph.dim + 1} colors")
    chi = sum(g(graph, p) for p in adjacent_pairs(order)) + (1 - graph.dim) * graph.num_vertices // 2
    return PermutationGenus(permutation=canonicalize(order), chi=chi, rho_times_two=2 - chi)


def regular_genus(graph: ColoredGraph, jobs: Optional[int] = None) -> GenusReport:
    perms = cyclic_permutations(graph.dim)
    if graph.num_vertices < C.GENUS_PARALLEL_MIN_VERTICES:
        jobs = 1
    entries = runtime.ordered_map(partial(rho_eps, graph), perms, jobs=jobs)

    best = min(entries, key=lambda e: e.rho_times_two)
    logger.debug("regular genus: 2rho=%d at %s", best.rho_times_two, best.permutation.label)
    return GenusReport(
        dim=graph.dim,
        num_vertices=graph.num_vertices,
        entries=entries,
        regular_genus_times_two=best.rho_times_two,
        argmin=best.permutation,
        orientable=is_bipartite(graph),
    )


# ===============================
# Residue 관계식 / 랭크
# ===============================

def gagliardi_relation_check(graph: ColoredGraph) -> TripleCheck:
    """2 g_ijk = g_ij + g_ik + g_jk - ν/2 를 모든 3색에 대해 검사 (잔차 = 좌변 - 우변)"""
    if graph.dim < 3:
        raise UnsupportedDimensionError(f"relation needs dim >= 3 (got {graph.dim})")
    residuals: Dict[str, int] = {}
    for t in combinations(graph.colors, 3):
        rhs = sum(g(graph, p) for p in combinations(t, 2)) - graph.num_vertices // 2
        residuals[_key(t)] = 2 * g(graph, t) - rhs
    return TripleCheck(holds=not any(residuals.values()), residuals=residuals)


def rank_upper_bound(graph: ColoredGraph) -> int:
    """min_{ijk} g_ijk - 1 (π1 생성원 개수의 상한)"""
    _require_dim4(graph, "rank_upper_bound")
    if not is_contracted(graph):
        raise NotContractedError("graph is not contracted (some g of four colors exceeds 1)")
    return min(g(graph, t) for t in combinations(graph.colors, 3)) - 1


def check_rank(graph: ColoredGraph, rank_m: int) -> int:
    bound = rank_upper_bound(graph)
    if rank_m < 0 or rank_m > bound:
        raise RankInconsistentError(
            f"rank m={rank_m} is inconsistent with the graph (0 <= m <= {bound} required)",
            detail={"rank_m": rank_m, "rank_upper_bound": bound},
        )
    return bound


def ensure_manifold(graph: ColoredGraph) -> None:
    status = manifold_check(graph)
    if status.state == ManifoldState.NOT_MANIFOLD:
        raise NotAManifoldCrystallizationError(status.diagnostic)


def rho_identity_check(graph: ColoredGraph) -> TripleCheck:
    """모든 ε 에 대해 ρ_ε = 2χ - 9 + Σ g_{ε_i ε_{i+2} ε_{i+4}} (잔차는 2ρ 단위)"""
    _require_dim4(graph, "rho_identity_check")
    ensure_manifold(graph)
    chi = euler_characteristic(graph)
    residuals: Dict[str, int] = {}
    for eps in cyclic_permutations(4):
        rhs = 2 * chi - 9 + sum(g(graph, t) for t in skip_triples(eps))
        residuals[eps.label] = rho_eps(graph, eps).rho_times_two - 2 * rhs
    return TripleCheck(holds=not any(residuals.values()), residuals=residuals)


# ===============================
# 분류 (simple / semi-simple / weak semi-simple)
# ===============================

def is_weak_semi_simple_labeled(graph: ColoredGraph, rank_m: int) -> bool:
    """주어진 색 라벨 그대로 g_{i,i+1,i+2} = m+1 (i ∈ Z_5)"""
    _require_dim4(graph, "is_weak_semi_simple_labeled")
    return all(g(graph, t) == rank_m + 1 for t in consecutive_triples(graph.colors))


def skip_to_consecutive_relabeling(eps: EpsLike) -> Tuple[int, ...]:
    """색 (ε0, ε2, ε4, ε1, ε3) -> (0, 1, 2, 3, 4): ε 의 skip triple 이 연속 triple 이 된다"""
    o = _as_order(eps)
    if len(o) != 5:
        raise UnsupportedDimensionError("skip relabeling is defined for five colors")
    perm = [0] * 5
    for new_color, old_color in enumerate((o[0], o[2], o[4], o[1], o[3])):
        perm[old_color] = new_color
    return tuple(perm)


def genus_order_for(delta: EpsLike) -> CyclicPermutation:
    """weak semi-simple 증거 δ 에서 하한을 달성하는 배열 (δ0, δ2, δ4, δ1, δ3)"""
    d = _as_order(delta)
    return canonicalize((d[0], d[2], d[4], d[1], d[3]))


def classify(graph: ColoredGraph, rank_m: int) -> Classification:
    _require_dim4(graph, "classify")
    check_rank(graph, rank_m)
    target = rank_m + 1
    counts = {t: g(graph, t) for t in combinations(graph.colors, 3)}
    excess = {_key(t): n - target for t, n in counts.items()}

    witness = None
    for eps in cyclic_permutations(4):
        if all(counts[t] == target for t in consecutive_triples(eps)):
            witness = eps
            break

    if witness is None:
        kind = ClassificationKind.NONE
    elif all(n == target for n in counts.values()):
        kind = ClassificationKind.SIMPLE if rank_m == 0 else ClassificationKind.SEMI_SIMPLE
    else:
        kind = ClassificationKind.WEAK_SEMI_SIMPLE

    if witness is None:
        return Classification(kind=kind, rank_m=rank_m, triple_excess=excess)

    relabeling = [0] * 5
    for i, c in enumerate(witness.order):
        relabeling[c] = i
    return Classification(
        kind=kind,
        rank_m=rank_m,
        triple_excess=excess,
        witness_order=witness,
        witness_relabeling=tuple(relabeling),
        genus_permutation=genus_order_for(witness),
    )


# ===============================
# Genus 하한 / 인증서
# ===============================

def genus_lower_bound(chi: int, rank_m: int) -> int:
    return 2 * chi + 5 * rank_m - 4


def genus_certificate(
        graph: ColoredGraph,
        rank_m: int,
        betti: Optional[BettiVector] = None,
) -> Optional[Certificate]:
    """G = 2χ + 5m - 4 를 보이는 경로들을 시도.

    (i) weak semi-simple 분류, (ii) ν <= 6χ + 20m - 6, (iii) Betti 입력 시
    Novik-Swartz 등식. 어느 경로도 성립하지 않으면 None (판정 불가, 반증 아님).
    """
    _require_dim4(graph, "genus_certificate")
    check_rank(graph, rank_m)
    ensure_manifold(graph)

    chi = euler_characteristic(graph)
    nu = graph.num_vertices
    routes: List[CertificateRoute] = []

    classification = classify(graph, rank_m)
    if classification.is_weak_semi_simple:
        routes.append(CertificateRoute.WEAK_SEMI_SIMPLE)

    if nu <= 6 * chi + 20 * rank_m - 6:
        # 이 경우 m+1 을 넘는 g_ijk 는 많아야 두 개
        if not classification.is_weak_semi_simple:
            raise AssertionError(
                f"vertex bound holds (nu={nu}) but no weak semi-simple labeling was found"
            )
        routes.append(CertificateRoute.VERTEX_BOUND)

    if betti is not None:
        b0, b1, _b2, b3, b4 = betti.entries
        ns = novik_swartz_check(graph, betti, rank_m)
        if ns.equality and (b0, b4) == (1, 1) and b1 == b3:
            if CertificateRoute.VERTEX_BOUND not in routes:
                raise AssertionError(
                    f"Novik-Swartz equality holds (nu={nu}) but the vertex bound does not"
                )
            routes.append(CertificateRoute.NOVIK_SWARTZ_EQUALITY)
        elif ns.equality:
            logger.warning("Betti equality ignored: betti %s is not of closed orientable type", betti.entries)

    if not routes:
        logger.info("no certificate at m=%d (chi=%d, nu=%d)", rank_m, chi, nu)
        return None
    return Certificate(
        route=routes[0],
        routes=routes,
        genus=genus_lower_bound(chi, rank_m),
        chi=chi,
        rank_m=rank_m,
        num_vertices=nu,
    )


def _certify_or_raise(graph: ColoredGraph, rank_m: int, name: str) -> Certificate:
    cert = genus_certificate(graph, rank_m)
    if cert is None:
        raise UncertifiedError(f"{name} graph has no genus certificate at m={rank_m}")
    return cert


def additivity_check(g1: ColoredGraph, m1: int, g2: ColoredGraph, m2: int) -> AdditivityReport:
    """두 인증된 그래프를 weak semi-simple 라벨로 옮긴 뒤 연결합하고 m1+m2 에서 재인증"""
    c1 = _certify_or_raise(g1, m1, "first")
    c2 = _certify_or_raise(g2, m2, "second")

    r1 = relabel(g1, classify(g1, m1).witness_relabeling)
    r2 = relabel(g2, classify(g2, m2).witness_relabeling)
    summed_graph = connected_sum(r1, 0, r2, 0)

    summed = _certify_or_raise(summed_graph, m1 + m2, "summed")
    chi_additive = summed.chi == c1.chi + c2.chi - 2
    holds = chi_additive and summed.genus == c1.genus + c2.genus
    if not holds:
        logger.warning("additivity failed: %d != %d + %d", summed.genus, c1.genus, c2.genus)
    return AdditivityReport(first=c1, second=c2, summed=summed, chi_additive=chi_additive, holds=holds)
