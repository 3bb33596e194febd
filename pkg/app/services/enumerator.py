"""작은 contracted 색칠 그래프의 전수 탐색 (색 고정, 정점 재번호 동형류 단위).

색 0 의 matching 은 (0-1, 2-3, ...) 로 고정한다: 정점 재번호로 임의의 완전
matching 하나를 이 형태로 옮길 수 있다. 나머지 색은 고정점 없는 involution 을
사전식으로 나열하며 가지치기 한다. 병렬 분할 단위는 색 1 의 involution.
"""
from __future__ import annotations

import logging
from functools import partial
from itertools import combinations
from typing import Iterator, List, Optional, Sequence, Tuple

from ..core.config import global_settings as C
from ..core.errors import ConfigInvalidError
from ..core.models import CensusEntry, ColoredGraph, SearchConfig
from ..core.runtime import runtime
from ..core.unionfind import count_components
from .canonical import canonical_form
from .colored_graph import is_bipartite
from .complex import manifold_check, triple_component_chis

logger = logging.getLogger(__name__)

Matchings = Tuple[Tuple[int, ...], ...]


# ===============================
# 설정 / involution 목록
# ===============================

def make_config(
        num_vertices: int,
        dim: Optional[int] = None,
        *,
        require_contracted: bool = True,
        require_level3_spheres: bool = True,
        require_bipartite: bool = False,
        max_results: Optional[int] = None,
        jobs: Optional[int] = None,
) -> SearchConfig:
    config = SearchConfig(
        num_vertices=num_vertices,
        dim=dim if dim is not None else C.ENUM_DEFAULT_DIM,
        require_contracted=require_contracted,
        require_level3_spheres=require_level3_spheres,
        require_bipartite=require_bipartite,
        max_results=max_results if max_results is not None else C.ENUM_MAX_RESULTS,
        jobs=jobs if jobs is not None else C.DEFAULT_JOBS,
    )
    return validate_config(config)


def validate_config(config: SearchConfig) -> SearchConfig:
    if config.num_vertices < 2 or config.num_vertices % 2:
        raise ConfigInvalidError(f"vertices must be even and >= 2 (got {config.num_vertices})")
    if not 2 <= config.dim <= 4:
        raise ConfigInvalidError(f"dim must be 2, 3 or 4 (got {config.dim})")
    if config.max_results is not None and config.max_results < 1:
        raise ConfigInvalidError(f"max_results must be positive (got {config.max_results})")
    if config.jobs < 1:
        raise ConfigInvalidError(f"jobs must be >= 1 (got {config.jobs})")
    return config


def involutions(n: int) -> List[Tuple[int, ...]]:
    """{0..n-1} 의 고정점 없는 involution 전부, 사전식"""

    def pairings(items: List[int]) -> Iterator[List[Tuple[int, int]]]:
        if not items:
            yield []
            return
        first, rest = items[0], items[1:]
        for i, other in enumerate(rest):
            for tail in pairings(rest[:i] + rest[i + 1:]):
                yield [(first, other)] + tail

    out = []
    for pairing in pairings(list(range(n))):
        partner = [0] * n
        for a, b in pairing:
            partner[a], partner[b] = b, a
        out.append(tuple(partner))
    return sorted(out)


def base_matching(n: int) -> Tuple[int, ...]:
    return tuple(v ^ 1 for v in range(n))


# ===============================
# 가지치기
# ===============================

def _is_bipartite_partial(matchings: Sequence[Sequence[int]], n: int) -> bool:
    side = [-1] * n
    for start in range(n):
        if side[start] >= 0:
            continue
        side[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for partner in matchings:
                w = partner[v]
                if side[w] < 0:
                    side[w] = 1 - side[v]
                    stack.append(w)
                elif side[w] == side[v]:
                    return False
    return True


def _level_ok(matchings: Matchings, config: SearchConfig) -> bool:
    """마지막으로 붙인 색 k 까지의 부분 그래프에서 필요조건 검사"""
    n = config.num_vertices
    k = len(matchings) - 1
    if config.require_level3_spheres and k >= 2:
        for pair in combinations(range(k), 2):
            _, chis = triple_component_chis(matchings, n, pair + (k,))
            if any(chi != 2 for chi in chis):
                return False
    if config.require_bipartite and not _is_bipartite_partial(matchings, n):
        return False
    if config.require_contracted and k == config.dim - 1:
        # 색 d 를 뺀 residue 는 이미 완성: 연결이어야 한다
        if count_components(matchings, n) != 1:
            return False
    return True


def _final_ok(matchings: Matchings, config: SearchConfig) -> bool:
    n = config.num_vertices
    if count_components(matchings, n) != 1:
        return False
    if config.require_contracted:
        for drop in range(config.dim + 1):
            if count_components([m for c, m in enumerate(matchings) if c != drop], n) != 1:
                return False
    return True


def _search_prefix(config: SearchConfig, prefix: Tuple[int, ...]) -> List[Tuple[Matchings, bytes]]:
    """색 1 이 prefix 인 부분 트리. 부분 트리 안에서 canonical form 중복 제거."""
    n = config.num_vertices
    choices = involutions(n)
    found: List[Tuple[Matchings, bytes]] = []
    seen = set()

    start: Matchings = (base_matching(n), prefix)
    if not _level_ok(start, config):
        return found

    stack: List[Matchings] = [start]
    while stack:
        current = stack.pop()
        if len(current) == config.dim + 1:
            if not _final_ok(current, config):
                continue
            graph = ColoredGraph(dim=config.dim, num_vertices=n, matchings=current)
            form = canonical_form(graph)
            if form not in seen:
                seen.add(form)
                found.append((current, form))
            continue
        # 역순으로 push 해서 사전식 순서로 pop
        for inv in reversed(choices):
            nxt = current + (inv,)
            if _level_ok(nxt, config):
                stack.append(nxt)
    return found


# ===============================
# 스트림
# ===============================

def _stream(config: SearchConfig) -> Iterator[Tuple[ColoredGraph, bytes]]:
    config = validate_config(config)
    n = config.num_vertices
    prefixes = involutions(n)
    search = partial(_search_prefix, config)

    if config.jobs > 1:
        chunks = runtime.ordered_map(search, prefixes, jobs=config.jobs, processes=True)
    else:
        chunks = (search(p) for p in prefixes)

    seen = set()
    emitted = 0
    for chunk in chunks:
        for matchings, form in chunk:
            if form in seen:
                continue
            seen.add(form)
            yield ColoredGraph(dim=config.dim, num_vertices=n, matchings=matchings), form
            emitted += 1
            if config.max_results is not None and emitted >= config.max_results:
                logger.info("enumeration stopped at max_results=%d", config.max_results)
                return
    logger.info("enumeration (dim=%d, nu=%d): %d graphs", config.dim, n, emitted)


def enumerate_graphs(config: SearchConfig) -> Iterator[ColoredGraph]:
    for graph, _form in _stream(config):
        yield graph


def census(config: SearchConfig) -> Iterator[CensusEntry]:
    """enumerate_graphs 와 같은 순서, 항목마다 canonical form 과 요약 정보"""
    for graph, form in _stream(config):
        yield CensusEntry(
            graph=graph,
            canonical_form=form.hex(),
            manifold_status=manifold_check(graph).state,
            bipartite=is_bipartite(graph),
        )
