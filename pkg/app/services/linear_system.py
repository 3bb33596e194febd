"""10개 residue 방정식 AX = B 의 정확한 유리수 검증.

행 = 3색 {k,l,r} (사전식), 열 = 2색 {i,j} (사전식).
A[t][p] = 1  (p ⊂ t),  X = (g_ij),  B_t = 2 g_t + ν/2 = 2 g_t + p̄ + q.
"""
from __future__ import annotations

import logging
from fractions import Fraction
from itertools import combinations
from typing import Dict, List

import numpy as np

from ..core.errors import UnsupportedDimensionError
from ..core.models import ColoredGraph, CyclicPermutation, LinearSystemRecord
from .colored_graph import g
from .complex import euler_characteristic
from .genus import (
    EpsLike,
    adjacent_pairs,
    ensure_manifold,
    check_rank,
    consecutive_triples,
    cyclic_permutations,
    rho_eps,
    skip_triples,
)

logger = logging.getLogger(__name__)

PAIRS = list(combinations(range(5), 2))
TRIPLES = list(combinations(range(5), 3))

# 고정 역행렬 A^{-1} (6 배): 2 <-> 1/3, -1 <-> -1/6
PRINTED_INVERSE_SIXTHS = (
    (2, 2, 2, -1, -1, -1, -1, -1, -1, 2),
    (2, -1, -1, 2, 2, -1, -1, -1, 2, -1),
    (-1, 2, -1, 2, -1, 2, -1, 2, -1, -1),
    (-1, -1, 2, -1, 2, 2, 2, -1, -1, -1),
    (2, -1, -1, -1, -1, 2, 2, 2, -1, -1),
    (-1, 2, -1, -1, 2, -1, 2, -1, 2, -1),
    (-1, -1, 2, 2, -1, -1, -1, 2, 2, -1),
    (-1, -1, 2, 2, -1, -1, 2, -1, -1, 2),
    (-1, 2, -1, -1, 2, -1, -1, 2, -1, 2),
    (2, -1, -1, -1, -1, 2, -1, -1, 2, 2),
)

MISPRINTED_COEFFICIENT = Fraction(1, 3)


# ===============================
# 정확한 유리수 행렬
# ===============================

def identity_matrix(n: int) -> np.ndarray:
    return np.array([[Fraction(i == j) for j in range(n)] for i in range(n)], dtype=object)


def inverse_matrix(x: np.ndarray) -> np.ndarray:
    """Fraction 행렬의 Gauss-Jordan 역행렬. 특이 행렬이면 ZeroDivisionError."""
    if x.ndim != 2 or x.shape[0] != x.shape[1]:
        raise ValueError(f"matrix is not square (shape = {x.shape})")
    n = x.shape[0]
    xi = np.hstack((x.astype(object), identity_matrix(n)))

    for i in range(n):
        for j in range(i, n):
            if xi[j, i] != 0:
                if i != j:
                    xi[[i, j]] = xi[[j, i]]
                break
        else:
            raise ZeroDivisionError("matrix is singular")
        xi[i, :] = xi[i, :] / xi[i, i]
        for j in range(n):
            if j != i and xi[j, i] != 0:
                xi[j, :] = xi[j, :] - xi[j, i] * xi[i, :]

    return xi[:, n:]


def system_matrix() -> np.ndarray:
    return np.array(
        [[Fraction(int(set(p) <= set(t))) for p in PAIRS] for t in TRIPLES],
        dtype=object,
    )


def printed_inverse() -> np.ndarray:
    return np.array(
        [[Fraction(v, 6) for v in row] for row in PRINTED_INVERSE_SIXTHS],
        dtype=object,
    )


def coefficient_row(eps: EpsLike, a_inverse: np.ndarray = None) -> List[Fraction]:
    """t_{klr} 의 계수 Σ_i c^{ε_i ε_{i+1}}_{klr} (3색 사전식 순서)"""
    inv = printed_inverse() if a_inverse is None else a_inverse
    rows = [PAIRS.index(p) for p in adjacent_pairs(eps)]
    return [sum((inv[r, col] for r in rows), Fraction(0)) for col in range(len(TRIPLES))]


# ===============================
# ρ_ε 닫힌 식
# ===============================

def rho_from_skip_triples(
        graph: ColoredGraph,
        eps: EpsLike,
        rank_m: int,
        coefficient: Fraction = Fraction(1),
) -> Fraction:
    """ρ_ε = 2χ + 5m - 4 + c · Σ (g_{ε_i ε_{i+2} ε_{i+4}} - m - 1).

    c = 1 이 올바른 계수, c = 1/3 은 오식.
    """
    chi = euler_characteristic(graph)
    correction = sum(g(graph, t) - rank_m - 1 for t in skip_triples(eps))
    return Fraction(2 * chi + 5 * rank_m - 4) + Fraction(coefficient) * correction


def _fmt(x: Fraction) -> str:
    return str(Fraction(x))


def verify_linear_system(graph: ColoredGraph, rank_m: int) -> LinearSystemRecord:
    if graph.dim != 4:
        raise UnsupportedDimensionError(f"the ten-equation system needs dim 4 (got {graph.dim})")
    check_rank(graph, rank_m)
    ensure_manifold(graph)

    nu = graph.num_vertices
    chi = euler_characteristic(graph)
    a = system_matrix()
    a_inv = inverse_matrix(a)
    printed = printed_inverse()

    t_excess = [g(graph, t) - (rank_m + 1) for t in TRIPLES]
    q = sum(t_excess)
    p_bar = 3 * chi + 10 * (rank_m + 1) - 15

    x = np.array([Fraction(g(graph, p)) for p in PAIRS], dtype=object)
    b = np.array([Fraction(2 * g(graph, t) + nu // 2) for t in TRIPLES], dtype=object)
    m_vec = np.array([Fraction(2 * (rank_m + 1) + p_bar + q)] * len(TRIPLES), dtype=object)
    t_vec = np.array([Fraction(2 * t) for t in t_excess], dtype=object)

    checks: Dict[str, bool] = {}
    checks["inverse_matches_printed"] = bool(np.all(a_inv == printed))
    checks["a_times_inverse_is_identity"] = bool(np.all(a.dot(printed) == identity_matrix(10)))
    checks["ax_equals_b"] = bool(np.all(a.dot(x) == b))
    checks["x_equals_inverse_b"] = bool(np.all(printed.dot(b) == x))
    checks["b_equals_m_plus_t"] = bool(np.all(b == m_vec + t_vec))
    checks["p_bar_identity"] = 2 * p_bar == 6 * chi + 20 * (rank_m + 1) - 30 and nu == 2 * p_bar + 2 * q

    table: Dict[str, List[str]] = {}
    pattern_ok = collapsed_ok = rho_ok = True
    t_by_triple = dict(zip(TRIPLES, t_excess))
    for eps in cyclic_permutations(4):
        row = coefficient_row(eps, printed)
        table[eps.label] = [_fmt(c) for c in row]

        consecutive = set(consecutive_triples(eps))
        expected = [Fraction(2, 3) if t in consecutive else Fraction(-1, 3) for t in TRIPLES]
        pattern_ok &= row == expected

        lhs = sum((c * t for c, t in zip(row, t_excess)), Fraction(0))
        rhs = Fraction(2, 3) * sum(t_by_triple[t] for t in consecutive_triples(eps)) \
            - Fraction(1, 3) * sum(t_by_triple[t] for t in skip_triples(eps))
        collapsed_ok &= lhs == rhs

        rho_ok &= rho_eps(graph, eps).rho == rho_from_skip_triples(graph, eps, rank_m)

    checks["coefficient_table_pattern"] = pattern_ok
    checks["collapsed_identity"] = collapsed_ok
    checks["rho_formula_corrected"] = rho_ok

    failed = [k for k, v in checks.items() if not v]
    if failed:
        logger.warning("linear system checks failed: %s", ", ".join(failed))

    return LinearSystemRecord(
        rank_m=rank_m,
        chi=chi,
        p_bar=p_bar,
        q=q,
        a=[[int(v) for v in row] for row in a],
        a_inverse=[[_fmt(v) for v in row] for row in a_inv],
        x=[int(v) for v in x],
        b=[int(v) for v in b],
        m_vector=[int(v) for v in m_vec],
        t_vector=[int(v) for v in t_vec],
        coefficient_table=table,
        checks=checks,
    )


def misprinted_formula_failures(graph: ColoredGraph, rank_m: int) -> List[CyclicPermutation]:
    """오식 계수 1/3 으로 ρ_ε 가 틀리는 ε 목록"""
    return [
        eps
        for eps in cyclic_permutations(4)
        if rho_eps(graph, eps).rho != rho_from_skip_triples(graph, eps, rank_m, MISPRINTED_COEFFICIENT)
    ]
