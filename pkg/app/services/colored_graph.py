from __future__ import annotations

import logging
from collections import deque
from typing import Any, Iterable, List, Mapping, Sequence, Union

from ..core.errors import (
    ColorOutOfRangeError,
    DimMismatchError,
    NotAPermutationError,
    VertexOutOfRangeError,
)
from ..core.models import ColoredGraph, ColorSet, Residue
from ..core.unionfind import component_labels as _labels_of, count_components

logger = logging.getLogger(__name__)


# ===============================
# 생성 / 검증
# ===============================

def validate(raw: Union[ColoredGraph, Mapping[str, Any]]) -> ColoredGraph:
    """후보 데이터 -> 검증된 ColoredGraph.

    raw 는 dim, num_vertices (또는 vertices), matchings 를 가진 mapping.
    위반 시 FixedPoint / NotInvolution / Disconnected / OddVertexCount /
    BadColorCount 오류.
    """
    if isinstance(raw, ColoredGraph):
        return raw
    data = dict(raw)
    if "num_vertices" not in data and "vertices" in data:
        data["num_vertices"] = data.pop("vertices")
    data["matchings"] = [tuple(int(x) for x in m) for m in data.get("matchings", [])]
    return ColoredGraph.model_validate(data)


def from_matchings(dim: int, matchings: Sequence[Sequence[int]]) -> ColoredGraph:
    num_vertices = len(matchings[0]) if matchings else 0
    return ColoredGraph(
        dim=dim,
        num_vertices=num_vertices,
        matchings=tuple(tuple(m) for m in matchings),
    )


def as_color_set(graph: ColoredGraph, colors: Iterable[int]) -> ColorSet:
    out = tuple(sorted(set(int(c) for c in colors)))
    for c in out:
        if not 0 <= c <= graph.dim:
            raise ColorOutOfRangeError(f"color {c} is outside 0..{graph.dim}")
    return out


# ===============================
# Residue 개수 g_B
# ===============================

def g(graph: ColoredGraph, colors: Iterable[int]) -> int:
    """Γ_B 의 연결 성분 개수. B = ∅ 이면 ν(Γ) (고립 정점)."""
    key = as_color_set(graph, colors)
    cache = graph._counts
    hit = cache.get(key)
    if hit is None:
        hit = count_components((graph.matchings[c] for c in key), graph.num_vertices)
        cache[key] = hit
    return hit


def component_labels(graph: ColoredGraph, colors: Iterable[int]) -> List[int]:
    key = as_color_set(graph, colors)
    return _labels_of((graph.matchings[c] for c in key), graph.num_vertices)


def residues(graph: ColoredGraph, colors: Iterable[int]) -> List[Residue]:
    """Γ_B 의 성분들 (최소 정점 인덱스 오름차순)"""
    key = as_color_set(graph, colors)
    labels = component_labels(graph, key)
    buckets: List[List[int]] = [[] for _ in range(max(labels) + 1)]
    for v, lab in enumerate(labels):
        buckets[lab].append(v)
    return [Residue(colors=key, vertices=tuple(vs)) for vs in buckets]


def is_contracted(graph: ColoredGraph) -> bool:
    full = graph.colors
    return all(g(graph, [c for c in full if c != drop]) == 1 for drop in full)


def is_bipartite(graph: ColoredGraph) -> bool:
    """Γ 가 이분 그래프인지 (K(Γ) 의 가향성)"""
    side = [-1] * graph.num_vertices
    side[0] = 0
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for partner in graph.matchings:
            w = partner[v]
            if side[w] < 0:
                side[w] = 1 - side[v]
                queue.append(w)
            elif side[w] == side[v]:
                return False
    return True


# ===============================
# 그래프 연산
# ===============================

def connected_sum(g1: ColoredGraph, v1: int, g2: ColoredGraph, v2: int) -> ColoredGraph:
    """Γ1 #_{v1 v2} Γ2.

    v1, v2 를 지우고 색 j 마다 v1 의 j-이웃과 v2 의 j-이웃을 잇는다.
    번호: Γ1 의 남은 정점(원래 순서) 다음 Γ2 의 남은 정점.
    """
    if g1.dim != g2.dim:
        raise DimMismatchError(f"connected sum needs equal dims ({g1.dim} vs {g2.dim})")
    if not 0 <= v1 < g1.num_vertices:
        raise VertexOutOfRangeError(f"v1={v1} is not a vertex of the first graph")
    if not 0 <= v2 < g2.num_vertices:
        raise VertexOutOfRangeError(f"v2={v2} is not a vertex of the second graph")

    n1, n2 = g1.num_vertices, g2.num_vertices
    map1 = {v: i for i, v in enumerate(v for v in range(n1) if v != v1)}
    map2 = {v: n1 - 1 + i for i, v in enumerate(v for v in range(n2) if v != v2)}

    matchings = []
    for c in range(g1.dim + 1):
        m1, m2 = g1.matchings[c], g2.matchings[c]
        u1, u2 = m1[v1], m2[v2]
        partner = [0] * (n1 + n2 - 2)
        for v, i in map1.items():
            w = m1[v]
            partner[i] = map2[u2] if w == v1 else map1[w]
        for v, i in map2.items():
            w = m2[v]
            partner[i] = map1[u1] if w == v2 else map2[w]
        matchings.append(tuple(partner))

    return ColoredGraph(dim=g1.dim, num_vertices=n1 + n2 - 2, matchings=tuple(matchings))


def check_color_permutation(graph: ColoredGraph, perm: Sequence[int]) -> tuple:
    perm = tuple(int(p) for p in perm)
    if sorted(perm) != list(graph.colors):
        raise NotAPermutationError(f"{perm} is not a permutation of 0..{graph.dim}")
    return perm


def relabel(graph: ColoredGraph, perm: Sequence[int]) -> ColoredGraph:
    """색 c 를 perm[c] 로 바꾼다: g(relabel(Γ,π), π(B)) = g(Γ, B)"""
    perm = check_color_permutation(graph, perm)
    matchings: List[tuple] = [()] * (graph.dim + 1)
    for c, new_c in enumerate(perm):
        matchings[new_c] = graph.matchings[c]
    return ColoredGraph(dim=graph.dim, num_vertices=graph.num_vertices, matchings=tuple(matchings))


def inverse_permutation(perm: Sequence[int]) -> tuple:
    inv = [0] * len(perm)
    for c, p in enumerate(perm):
        inv[p] = c
    return tuple(inv)
