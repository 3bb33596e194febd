"""색 고정, 정점 재번호에 대한 canonical form.

색마다 이웃이 정확히 하나이므로 뿌리 정점 하나를 정하면 색 순서 BFS 가
번호를 완전히 결정한다. 따라서 canonical form 은 뿌리 후보들에 대한 BFS
행렬의 최솟값이다.

- refinement: 정점마다 2색 cycle 길이 서명을 계산하고 최소 서명 클래스만 뿌리로 쓴다.
- branch-and-bound: 코드를 한 칸씩 만들며 현재 최솟값보다 커지는 순간 중단한다.
"""
from __future__ import annotations

from collections import Counter, deque
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

from ..core.models import ColoredGraph
from ..core.unionfind import component_labels

_WIDTH = 4


def vertex_signatures(matchings: Sequence[Sequence[int]], num_vertices: int) -> List[Tuple[int, ...]]:
    """색 쌍마다 v 를 지나는 2색 cycle 의 길이 (색 보존 동형 사상에 불변)"""
    per_pair = []
    for i, j in combinations(range(len(matchings)), 2):
        labels = component_labels((matchings[i], matchings[j]), num_vertices)
        sizes = Counter(labels)
        per_pair.append([sizes[lab] for lab in labels])
    return [tuple(col[v] for col in per_pair) for v in range(num_vertices)]


def _code_from_root(
        matchings: Sequence[Sequence[int]],
        num_vertices: int,
        root: int,
        best: Optional[List[int]],
) -> Optional[List[int]]:
    """root 에서 색 순서 BFS 로 번호를 붙인 행렬 (행 우선). best 보다 크면 None."""
    label = [-1] * num_vertices
    label[root] = 0
    order = deque([root])
    next_label = 1
    code: List[int] = []
    smaller = best is None
    while order:
        v = order.popleft()
        for partner in matchings:
            w = partner[v]
            if label[w] < 0:
                label[w] = next_label
                next_label += 1
                order.append(w)
            x = label[w]
            if not smaller:
                ref = best[len(code)]
                if x > ref:
                    return None
                if x < ref:
                    smaller = True
            code.append(x)
    return code


def canonical_code(matchings: Sequence[Sequence[int]], num_vertices: int) -> List[int]:
    signatures = vertex_signatures(matchings, num_vertices)
    low = min(signatures)
    best: Optional[List[int]] = None
    for root in range(num_vertices):
        if signatures[root] != low:
            continue
        code = _code_from_root(matchings, num_vertices, root, best)
        if code is not None:
            best = code
    return best


def canonical_form(graph: ColoredGraph) -> bytes:
    """정점 재번호에 대해 불변인 byte 열 (색은 고정). 같은 form <-> 동형."""
    code = canonical_code(graph.matchings, graph.num_vertices)
    header = [graph.dim, graph.num_vertices]
    return b"".join(x.to_bytes(_WIDTH, "big") for x in header + code)


def canonical_graph(graph: ColoredGraph) -> ColoredGraph:
    """canonical form 을 다시 그래프로 (정점 번호가 canonical 한 대표 그래프)"""
    code = canonical_code(graph.matchings, graph.num_vertices)
    k = graph.dim + 1
    rows = [code[v * k:(v + 1) * k] for v in range(graph.num_vertices)]
    matchings = tuple(tuple(row[c] for row in rows) for c in range(k))
    return ColoredGraph(dim=graph.dim, num_vertices=graph.num_vertices, matchings=matchings)


def relabel_vertices(graph: ColoredGraph, perm: Sequence[int]) -> ColoredGraph:
    """정점 v -> perm[v]"""
    n = graph.num_vertices
    matchings = []
    for partner in graph.matchings:
        out = [0] * n
        for v, w in enumerate(partner):
            out[perm[v]] = perm[w]
        matchings.append(tuple(out))
    return ColoredGraph(dim=graph.dim, num_vertices=n, matchings=tuple(matchings))
