# -*- coding: utf-8 -*-
"""
공용 fixture 와 독립 oracle (networkx 순회, 전수 involution 나열)
"""
from itertools import combinations, permutations, product
from pathlib import Path

import networkx as nx
import pytest

from app.core.models import ColoredGraph
from app.services.catalog import sphere, sum_power
from app.services.colored_graph import connected_sum

DATA_DIR = Path(__file__).resolve().parent.parent / "data"

A_MATCHING = (1, 0, 3, 2)  # {0-1, 2-3}
B_MATCHING = (2, 3, 0, 1)  # {0-2, 1-3}


# ========================================
# 그래프 구성
# ========================================
def dipole(pair=(0, 1)) -> ColoredGraph:
    """정점 4개: pair 의 두 색은 A, 나머지 세 색은 B. g_{나머지 세 색} = 2, 다른 3색은 1."""
    return ColoredGraph(
        dim=4,
        num_vertices=4,
        matchings=tuple(A_MATCHING if c in pair else B_MATCHING for c in range(5)),
    )


def chain_sum(graphs) -> ColoredGraph:
    out = graphs[0]
    for other in graphs[1:]:
        out = connected_sum(out, 0, other, 0)
    return out


def star_sum() -> ColoredGraph:
    """A 쌍이 {0,1},{0,2},{0,3} 인 세 dipole 의 합: 어떤 순환 배열도 weak semi-simple 이 아님"""
    return chain_sum([dipole((0, 1)), dipole((0, 2)), dipole((0, 3))])


def all_dipoles_sum() -> ColoredGraph:
    """10 가지 dipole 전부의 합: 모든 g_ijk = 2 (m = 1 에서 semi-simple)"""
    return chain_sum([dipole(p) for p in combinations(range(5), 2)])


def identity_corpus():
    corpus = [("sphere", sphere(4))]
    corpus += [(f"sphere^{k}", sum_power(sphere(4), k)) for k in range(2, 6)]
    corpus += [(f"dipole{p}", dipole(p)) for p in combinations(range(5), 2)]
    corpus += [
        (f"dipole{p}#dipole{q}", connected_sum(dipole(p), 0, dipole(q), 0))
        for p, q in [((0, 1), (2, 3)), ((0, 1), (0, 2)), ((1, 4), (2, 3)), ((3, 4), (3, 4))]
    ]
    corpus += [("star_sum", star_sum()), ("all_dipoles_sum", all_dipoles_sum())]
    return corpus


@pytest.fixture
def sphere4():
    return sphere(4)


@pytest.fixture
def dipole01():
    return dipole((0, 1))


@pytest.fixture
def sphere4_path():
    return DATA_DIR / "sphere4.cgf"


# ========================================
# Oracle
# ========================================
def nx_component_count(graph: ColoredGraph, colors) -> int:
    """networkx 순회로 Γ_B 성분 수 (union-find 와 독립)"""
    mg = nx.MultiGraph()
    mg.add_nodes_from(range(graph.num_vertices))
    for c in colors:
        partner = graph.matchings[c]
        mg.add_edges_from((v, w) for v, w in enumerate(partner) if v < w)
    return nx.number_connected_components(mg)


def nx_components(graph: ColoredGraph, colors):
    mg = nx.MultiGraph()
    mg.add_nodes_from(range(graph.num_vertices))
    for c in colors:
        mg.add_edges_from((v, w) for v, w in enumerate(graph.matchings[c]) if v < w)
    return [frozenset(comp) for comp in nx.connected_components(mg)]


def fixed_point_free_involutions(n):
    out = []
    for perm in permutations(range(n)):
        if all(perm[v] != v and perm[perm[v]] == v for v in range(n)):
            out.append(perm)
    return out


def orbit_key(matchings, n):
    """모든 정점 재번호에 대한 최소 행렬 (완전 탐색)"""
    best = None
    for perm in permutations(range(n)):
        relabeled = []
        for partner in matchings:
            out = [0] * n
            for v, w in enumerate(partner):
                out[perm[v]] = perm[w]
            relabeled.append(tuple(out))
        key = tuple(relabeled)
        if best is None or key < best:
            best = key
    return best


def _nx_is_sphere_triple(matchings, n, triple) -> bool:
    g = ColoredGraph.model_construct(dim=len(matchings) - 1, num_vertices=n, matchings=tuple(matchings))
    for comp in nx_components(g, triple):
        pairs = 0
        for pair in combinations(triple, 2):
            pairs += sum(1 for c in nx_components(g, pair) if c <= comp)
        if pairs - len(comp) // 2 != 2:
            return False
    return True


def brute_force_census(n, dim=4, spheres=True):
    """모든 involution 튜플 -> 필터 -> 궤도 중복 제거 (color 0 고정 없음)"""
    invs = fixed_point_free_involutions(n)
    keys = set()
    for matchings in product(invs, repeat=dim + 1):
        g = ColoredGraph.model_construct(dim=dim, num_vertices=n, matchings=tuple(matchings))
        if nx_component_count(g, range(dim + 1)) != 1:
            continue
        if any(nx_component_count(g, [c for c in range(dim + 1) if c != drop]) != 1 for drop in range(dim + 1)):
            continue
        if spheres and not all(_nx_is_sphere_triple(matchings, n, t) for t in combinations(range(dim + 1), 3)):
            continue
        keys.add(orbit_key(matchings, n))
    return keys
