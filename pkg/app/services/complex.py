from __future__ import annotations

import logging
from collections import Counter
from itertools import combinations
from math import comb
from typing import Iterable, List, Optional, Sequence, Tuple

from ..core.errors import (
    BettiEulerMismatchError,
    NotAManifoldCrystallizationError,
    RankTooSmallError,
    UnsupportedDimensionError,
)
from ..core.models import (
    BettiVector,
    ColoredGraph,
    ComplexReport,
    DehnSommervilleResult,
    FVector,
    HVector,
    ManifoldState,
    ManifoldStatus,
    NovikSwartzResult,
    Residue,
)
from ..core.unionfind import component_labels as _labels_of
from .colored_graph import as_color_set, g

logger = logging.getLogger(__name__)


def _require_dim4(graph: ColoredGraph, what: str) -> None:
    if graph.dim != 4:
        raise UnsupportedDimensionError(f"{what} is defined for dim 4 only (got dim {graph.dim})")


# ===============================
# f-vector / Euler characteristic
# ===============================

def f_vector(graph: ColoredGraph) -> FVector:
    """f_j = Σ_{|S| = j+1} g(Γ, Δ_d \\ S)  (j-simplex <-> Δ_d\\S residue)"""
    full = graph.colors
    entries = []
    for j in range(graph.dim + 1):
        total = 0
        for removed in combinations(full, j + 1):
            total += g(graph, [c for c in full if c not in removed])
        entries.append(total)
    return FVector(entries=tuple(entries))


def euler_characteristic(graph: ColoredGraph) -> int:
    return sum((-1) ** j * f for j, f in enumerate(f_vector(graph).entries))


def dehn_sommerville_residuals(f: FVector) -> Tuple[int, int]:
    if f.dim != 4:
        raise UnsupportedDimensionError("Dehn-Sommerville residuals need a 4-dimensional f-vector")
    return (2 * f[1] - 3 * f[2] + 4 * f[3] - 5 * f[4], 2 * f[3] - 5 * f[4])


def dehn_sommerville_check(graph: ColoredGraph, f: Optional[FVector] = None) -> DehnSommervilleResult:
    """4차원 Dehn-Sommerville: 첫 식은 χ 정의, 둘째/셋째 식의 잔차가 0 이어야 함"""
    _require_dim4(graph, "dehn_sommerville_check")
    f = f or f_vector(graph)
    residuals = dehn_sommerville_residuals(f)
    chi = sum((-1) ** j * x for j, x in enumerate(f.entries))
    return DehnSommervilleResult(
        holds=residuals == (0, 0),
        euler_characteristic=chi,
        residuals=residuals,
    )


# ===============================
# h-vector / Novik-Swartz
# ===============================

def h_vector_from_f(f: FVector) -> HVector:
    """Σ h_i x^{n-i} = Σ f_{i-1} (x-1)^{n-i},  n = d+1, f_{-1} = 1 (정수 전개)"""
    n = f.dim + 1
    ext = (1,) + f.entries
    entries = []
    for i in range(n + 1):
        entries.append(sum((-1) ** (i - k) * comb(n - k, i - k) * ext[k] for k in range(i + 1)))
    return HVector(entries=tuple(entries))


def h_vector(graph: ColoredGraph) -> HVector:
    return h_vector_from_f(f_vector(graph))


def novik_swartz_check(graph: ColoredGraph, betti: BettiVector, rank_m: int) -> NovikSwartzResult:
    _require_dim4(graph, "novik_swartz_check")
    chi = euler_characteristic(graph)
    if betti.alternating_sum != chi:
        raise BettiEulerMismatchError(
            f"alternating Betti sum {betti.alternating_sum} != Euler characteristic {chi}"
        )
    b0, b1, b2, b3, b4 = betti.entries
    if rank_m < b1:
        raise RankTooSmallError(f"rank m={rank_m} is smaller than beta_1={b1}")

    nu = graph.num_vertices
    weighted = b0 + 4 * b1 + 6 * b2 + 4 * b3 + b4
    vertex_bound = 6 * chi + 10 * (2 * rank_m - 1)
    return NovikSwartzResult(
        bound_holds=weighted <= nu,
        equality=weighted == nu,
        vertex_bound_triggered=nu <= vertex_bound,
        betti_weighted_sum=weighted,
        num_vertices=nu,
        vertex_bound=vertex_bound,
    )


# ===============================
# Residue 별 국소 계산
# ===============================

def _pair_counts_per_component(
        matchings: Sequence[Sequence[int]], num_vertices: int, colors: Sequence[int]
) -> Tuple[List[int], Counter, dict]:
    """colors-residue 성분 번호, 성분 크기, 그리고 각 pair 의 성분 내부 개수"""
    labels = _labels_of((matchings[c] for c in colors), num_vertices)
    sizes = Counter(labels)
    pair_counts = {}
    for pair in combinations(colors, 2):
        sub = _labels_of((matchings[c] for c in pair), num_vertices)
        pair_counts[pair] = Counter(lab for lab, _ in set(zip(labels, sub)))
    return labels, sizes, pair_counts


def _residue_of(labels: List[int], lab: int, colors: Sequence[int]) -> Residue:
    return Residue(colors=tuple(colors), vertices=tuple(v for v, x in enumerate(labels) if x == lab))


def triple_component_chis(
        matchings: Sequence[Sequence[int]], num_vertices: int, colors: Sequence[int]
) -> Tuple[List[int], List[int]]:
    """부분 matching 목록에서도 쓰는 저수준 버전: (성분 번호, 성분별 χ)"""
    labels, sizes, pair_counts = _pair_counts_per_component(matchings, num_vertices, colors)
    chis = [sum(pair_counts[p][lab] for p in pair_counts) - sizes[lab] // 2 for lab in sorted(sizes)]
    return labels, chis


def residue_euler_characteristics(graph: ColoredGraph, colors: Iterable[int]) -> List[Tuple[Residue, int]]:
    """3색 residue 의 성분마다 곡면 Euler 표수 g_ij + g_ik + g_jk - ν_comp/2"""
    key = as_color_set(graph, colors)
    if len(key) != 3:
        raise ValueError("residue_euler_characteristics needs exactly three colors")
    labels, chis = triple_component_chis(graph.matchings, graph.num_vertices, key)
    return [(_residue_of(labels, lab, key), chi) for lab, chi in enumerate(chis)]


def _three_dim_residue_genera(graph: ColoredGraph, colors: Sequence[int]) -> List[Tuple[int, int]]:
    """4색 residue 성분마다 (성분 번호, 최소 2ρ): 3차원 regular genus"""
    labels, sizes, pair_counts = _pair_counts_per_component(graph.matchings, graph.num_vertices, colors)
    a, b, c, d = colors
    # 4색의 순환 배열 3가지
    orders = [(a, b, c, d), (a, b, d, c), (a, c, b, d)]
    out = []
    for lab in sorted(sizes):
        best_chi = None
        for eps in orders:
            chi = sum(
                pair_counts[tuple(sorted((eps[i], eps[(i + 1) % 4])))][lab] for i in range(4)
            ) - sizes[lab]
            best_chi = chi if best_chi is None else max(best_chi, chi)
        out.append((lab, 2 - best_chi))
    return out


def manifold_check(graph: ColoredGraph) -> ManifoldStatus:
    """다양체 조건 검사.

    NotManifold: 어떤 3색 residue 성분이 2-구면이 아님 (증거 residue 포함).
    Verified: 추가로 모든 4색 residue 성분의 regular genus 가 0 (S^3).
    Unverified: 그 외. 참/거짓 어느 쪽도 확정하지 않음.
    """
    d = graph.dim
    if d == 2:
        return ManifoldStatus(state=ManifoldState.VERIFIED, diagnostic="connected 3-colored graph")
    if d > 4:
        raise UnsupportedDimensionError(f"manifold_check supports dim <= 4 (got {d})")

    for triple in combinations(graph.colors, 3):
        for residue, chi in residue_euler_characteristics(graph, triple):
            if chi != 2:
                return ManifoldStatus(
                    state=ManifoldState.NOT_MANIFOLD,
                    diagnostic=f"residue on colors {triple} at vertex {residue.vertices[0]} has chi={chi}, not a 2-sphere",
                    witness=residue,
                )
    if d == 3:
        return ManifoldStatus(state=ManifoldState.VERIFIED, diagnostic="all 3-residues are 2-spheres")

    for quad in combinations(graph.colors, 4):
        for lab, rho2 in _three_dim_residue_genera(graph, quad):
            if rho2 > 0:
                return ManifoldStatus(
                    state=ManifoldState.UNVERIFIED,
                    diagnostic=f"residue on colors {quad} (component {lab}) has regular genus {rho2 / 2:g} > 0; S^3 not confirmed",
                )
    return ManifoldStatus(state=ManifoldState.VERIFIED, diagnostic="all 4-residues have regular genus 0")


def vertex_identity_check(graph: ColoredGraph) -> bool:
    """ν(Γ) = 6χ + 2 Σ g_ijk - 30"""
    _require_dim4(graph, "vertex_identity_check")
    status = manifold_check(graph)
    if status.state == ManifoldState.NOT_MANIFOLD:
        raise NotAManifoldCrystallizationError(status.diagnostic)
    chi = euler_characteristic(graph)
    triples = sum(g(graph, t) for t in combinations(graph.colors, 3))
    return graph.num_vertices == 6 * chi + 2 * triples - 30


# ===============================
# JSON 리포트
# ===============================

def complex_report(
        graph: ColoredGraph,
        betti: Optional[BettiVector] = None,
        rank_m: Optional[int] = None,
) -> ComplexReport:
    f = f_vector(graph)
    novik = None
    if betti is not None:
        novik = novik_swartz_check(graph, betti, rank_m if rank_m is not None else betti.entries[1])
    return ComplexReport(
        f_vector=list(f.entries),
        h_vector=list(h_vector_from_f(f).entries),
        euler_characteristic=sum((-1) ** j * x for j, x in enumerate(f.entries)),
        dehn_sommerville=dehn_sommerville_check(graph, f) if graph.dim == 4 else None,
        manifold_status=manifold_check(graph),
        novik_swartz=novik,
    )
