from __future__ import annotations

from typing import Iterable, List, Sequence


class UnionFind:
    """경로 압축 + 크기 기반 합치기 union-find (연결 성분 개수 추적)"""

    __slots__ = ("parents", "sizes", "num_components")

    def __init__(self, size: int) -> None:
        self.parents = list(range(size))
        self.sizes = [1] * size
        self.num_components = size

    def find(self, elem: int) -> int:
        parents = self.parents
        root = elem
        while parents[root] != root:
            root = parents[root]
        # path compression
        while parents[elem] != root:
            parents[elem], elem = root, parents[elem]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.sizes[ra] < self.sizes[rb]:
            ra, rb = rb, ra
        self.parents[rb] = ra
        self.sizes[ra] += self.sizes[rb]
        self.num_components -= 1
        return True

    def labels(self) -> List[int]:
        """성분 번호: 최소 정점 인덱스 오름차순으로 0, 1, 2, ..."""
        out: List[int] = []
        seen: dict = {}
        for v in range(len(self.parents)):
            root = self.find(v)
            lab = seen.get(root)
            if lab is None:
                lab = seen[root] = len(seen)
            out.append(lab)
        return out


def union_matchings(matchings: Iterable[Sequence[int]], num_vertices: int) -> UnionFind:
    uf = UnionFind(num_vertices)
    for partner in matchings:
        for v, w in enumerate(partner):
            if v < w:
                uf.union(v, w)
    return uf


def count_components(matchings: Iterable[Sequence[int]], num_vertices: int) -> int:
    return union_matchings(matchings, num_vertices).num_components


def component_labels(matchings: Iterable[Sequence[int]], num_vertices: int) -> List[int]:
    return union_matchings(matchings, num_vertices).labels()
