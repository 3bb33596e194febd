#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
순환 배열 / regular genus / 랭크 / 분류 / 인증서 / 가법성 테스트
"""
import time
from fractions import Fraction
from itertools import combinations, permutations

import pytest

from app.core.config import global_settings as C
from app.core.errors import (
    DimMismatchError,
    NotAPermutationError,
    NotContractedError,
    RankInconsistentError,
    UncertifiedError,
    UnsupportedDimensionError,
)
from app.core.models import (
    BettiVector,
    CertificateRoute,
    ClassificationKind,
    ColoredGraph,
    ManifoldState,
)
from app.services.catalog import random_colored_graph, sphere
from app.services.colored_graph import g, relabel
from app.services.complex import euler_characteristic, manifold_check
from app.services.genus import (
    additivity_check,
    canonicalize,
    check_rank,
    classify,
    consecutive_triples,
    cyclic_permutations,
    gagliardi_relation_check,
    genus_certificate,
    genus_lower_bound,
    genus_order_for,
    is_weak_semi_simple_labeled,
    rank_upper_bound,
    regular_genus,
    rho_eps,
    rho_identity_check,
    skip_to_consecutive_relabeling,
    skip_triples,
)
from app.services.linear_system import rho_from_skip_triples
from conftest import A_MATCHING, B_MATCHING, all_dipoles_sum, dipole, identity_corpus, star_sum


def rotations_and_reflections(order):
    n = len(order)
    out = []
    for seq in (tuple(order), tuple(reversed(order))):
        for k in range(n):
            out.append(seq[k:] + seq[:k])
    return out


class TestCyclicPermutations:
    """d!/2 개 대표원"""

    def test_counts(self):
        assert len(cyclic_permutations(2)) == 1
        assert len(cyclic_permutations(3)) == 3
        assert len(cyclic_permutations(4)) == 12

    def test_lexicographic_representatives(self):
        perms = cyclic_permutations(4)
        orders = [p.order for p in perms]
        assert orders == sorted(orders)
        assert orders[0] == (0, 1, 2, 3, 4)
        assert orders[-1] == (2, 1, 0, 3, 4)
        for o in orders:
            assert o[-1] == 4
            assert o[0] < o[3]

    def test_canonicalize_fixed_points(self):
        """대표원의 모든 회전/반사 -> 같은 대표원"""
        for eps in cyclic_permutations(4):
            for variant in rotations_and_reflections(eps.order):
                assert canonicalize(variant) == eps

    def test_canonicalize_examples(self):
        assert canonicalize((4, 0, 1, 2, 3)).order == (0, 1, 2, 3, 4)
        assert canonicalize((3, 2, 1, 0, 4)).order == (0, 1, 2, 3, 4)
        assert canonicalize((0, 2, 4, 1, 3)).order == (1, 3, 0, 2, 4)

    def test_not_a_permutation(self):
        with pytest.raises(NotAPermutationError):
            canonicalize((0, 1, 1, 3, 4))

    def test_label(self):
        assert cyclic_permutations(4)[0].label == "(0,1,2,3,4)"


class TestRegularGenus:
    """χ_ε, ρ_ε, ρ(Γ)"""

    def test_sphere_is_zero_everywhere(self, sphere4):
        report = regular_genus(sphere4)
        assert len(report.entries) == 12
        assert all(e.rho_times_two == 0 for e in report.entries)
        assert report.regular_genus_times_two == 0
        assert report.orientable

    def test_dipole_values(self, dipole01):
        assert rho_eps(dipole01, (0, 1, 2, 3, 4)).rho_times_two == 0
        assert rho_eps(dipole01, (0, 2, 1, 3, 4)).rho_times_two == 2
        report = regular_genus(dipole01)
        assert report.regular_genus_times_two == 0
        assert report.argmin.order == (0, 1, 2, 3, 4)

    def test_rho_is_fraction(self, dipole01):
        assert rho_eps(dipole01, (0, 2, 1, 3, 4)).rho == Fraction(1)

    def test_invariant_under_rotation_and_reflection(self):
        graph = star_sum()
        for eps in cyclic_permutations(4):
            expected = rho_eps(graph, eps).rho_times_two
            for variant in rotations_and_reflections(eps.order):
                assert rho_eps(graph, variant).rho_times_two == expected

    def test_dim_mismatch(self, sphere4):
        with pytest.raises(DimMismatchError):
            rho_eps(sphere4, (0, 1, 2, 3))

    def test_parallel_report_matches_serial(self, monkeypatch):
        """스레드 풀 경로에서도 같은 순서 / 같은 값"""
        graph = all_dipoles_sum()
        serial = regular_genus(graph, jobs=1)
        monkeypatch.setattr(C, "GENUS_PARALLEL_MIN_VERTICES", 0)
        parallel = regular_genus(graph, jobs=3)
        assert parallel == serial

    def test_three_dim(self):
        report = regular_genus(sphere(3))
        assert len(report.entries) == 3
        assert report.regular_genus_times_two == 0

    @pytest.mark.slow
    def test_ten_thousand_vertices_under_one_second(self):
        """정점 10,000 개 무작위 그래프, 단일 스레드, 빈 캐시에서 1 초 미만"""
        matchings = random_colored_graph(4, 10_000, 7).matchings
        timings = []
        for _ in range(3):
            graph = ColoredGraph(dim=4, num_vertices=10_000, matchings=matchings)
            start = time.perf_counter()
            report = regular_genus(graph, jobs=1)
            timings.append(time.perf_counter() - start)
            assert len(report.entries) == 12
        assert min(timings) < 1.0


class TestIdentities:
    """residue 관계식 / ρ_ε 의 skip triple 표현"""

    def test_gagliardi_corpus(self):
        for name, graph in identity_corpus():
            result = gagliardi_relation_check(graph)
            assert result.holds, name
            assert set(result.residuals) == {",".join(map(str, t)) for t in combinations(range(5), 3)}

    def test_gagliardi_agrees_with_sphere_condition(self):
        """관계식 성립 <=> 모든 3색 residue 가 2-구면 (무작위 30 개 + corpus)"""
        graphs = [(f"seed{seed}", random_colored_graph(4, 20, seed)) for seed in range(30)] + identity_corpus()
        states = []
        for name, graph in graphs:
            state = manifold_check(graph).state
            states.append(state)
            assert gagliardi_relation_check(graph).holds == (state != ManifoldState.NOT_MANIFOLD), name
        assert ManifoldState.NOT_MANIFOLD in states

    def test_gagliardi_needs_dim_three(self):
        with pytest.raises(UnsupportedDimensionError):
            gagliardi_relation_check(sphere(2))

    def test_gagliardi_on_non_contracted(self):
        """contracted 가 아니어도 관계식은 성립"""
        graph = ColoredGraph(dim=4, num_vertices=4, matchings=(B_MATCHING,) + (A_MATCHING,) * 4)
        assert gagliardi_relation_check(graph).holds

    def test_rho_identity_corpus(self):
        for name, graph in identity_corpus():
            assert rho_identity_check(graph).holds, name

    def test_rho_closed_form_exact(self):
        """ρ_ε == 2χ + 5m - 4 + Σ (g_skip - m - 1), Fraction 비교"""
        for name, graph in identity_corpus():
            bound = rank_upper_bound(graph)
            for m in range(bound + 1):
                for eps in cyclic_permutations(4):
                    assert rho_eps(graph, eps).rho == rho_from_skip_triples(graph, eps, m), (name, m, eps.label)

    def test_rho_skip_triples_by_hand(self, dipole01):
        """ε = (0,2,1,3,4): skip triple 에 {2,3,4} 포함 -> ρ = 2*2 - 9 + 6 = 1"""
        eps = (0, 2, 1, 3, 4)
        assert sum(g(dipole01, t) for t in skip_triples(eps)) == 6
        assert rho_eps(dipole01, eps).rho == 1


class TestRank:
    """rank 상한 / 일관성"""

    def test_upper_bounds(self, sphere4, dipole01):
        assert rank_upper_bound(sphere4) == 0
        assert rank_upper_bound(dipole01) == 0
        assert rank_upper_bound(all_dipoles_sum()) == 1

    def test_not_contracted(self):
        graph = ColoredGraph(dim=4, num_vertices=4, matchings=(B_MATCHING,) + (A_MATCHING,) * 4)
        with pytest.raises(NotContractedError):
            rank_upper_bound(graph)

    def test_inconsistent(self, sphere4):
        with pytest.raises(RankInconsistentError) as info:
            check_rank(sphere4, 1)
        assert info.value.detail == {"rank_m": 1, "rank_upper_bound": 0}
        with pytest.raises(RankInconsistentError):
            check_rank(sphere4, -1)


class TestClassify:
    """simple / semi-simple / weak semi-simple"""

    def test_sphere_simple(self, sphere4):
        result = classify(sphere4, 0)
        assert result.kind == ClassificationKind.SIMPLE
        assert result.witness_order.order == (0, 1, 2, 3, 4)
        assert result.witness_relabeling == (0, 1, 2, 3, 4)
        assert result.genus_permutation.order == (1, 3, 0, 2, 4)

    def test_dipole_weak_semi_simple(self, dipole01):
        result = classify(dipole01, 0)
        assert result.kind == ClassificationKind.WEAK_SEMI_SIMPLE
        assert result.triple_excess["2,3,4"] == 1
        assert sum(result.triple_excess.values()) == 1
        relabeled = relabel(dipole01, result.witness_relabeling)
        assert is_weak_semi_simple_labeled(relabeled, 0)

    def test_all_dipoles_semi_simple(self):
        graph = all_dipoles_sum()
        assert classify(graph, 1).kind == ClassificationKind.SEMI_SIMPLE
        assert classify(graph, 0).kind == ClassificationKind.NONE

    def test_star_sum_none(self):
        result = classify(star_sum(), 0)
        assert result.kind == ClassificationKind.NONE
        assert not result.is_weak_semi_simple
        assert result.witness_order is None
        assert {k for k, v in result.triple_excess.items() if v} == {"2,3,4", "1,3,4", "1,2,4"}

    def test_invariant_under_color_relabeling(self):
        """120 개 색 재배치 모두 같은 분류"""
        for graph in (sphere(4), dipole((1, 3)), star_sum()):
            expected = classify(graph, 0).kind
            for perm in permutations(range(5)):
                assert classify(relabel(graph, perm), 0).kind == expected

    def test_witness_consecutive_triples(self):
        for pair in combinations(range(5), 2):
            graph = dipole(pair)
            result = classify(graph, 0)
            for t in consecutive_triples(result.witness_order):
                assert g(graph, t) == 1

    def test_genus_order_attains_bound(self):
        for graph, m in ((dipole((2, 4)), 0), (all_dipoles_sum(), 1)):
            result = classify(graph, m)
            rho = rho_eps(graph, genus_order_for(result.witness_order)).rho
            assert rho == genus_lower_bound(euler_characteristic(graph), m)

    def test_skip_relabeling(self):
        """ε = (2,0,3,1,4) -> π(c) = c - 2 (mod 5)"""
        eps = (2, 0, 3, 1, 4)
        perm = skip_to_consecutive_relabeling(eps)
        assert perm == tuple((c - 2) % 5 for c in range(5))
        graph = star_sum()
        relabeled = relabel(graph, perm)
        assert sorted(g(relabeled, t) for t in consecutive_triples(range(5))) == sorted(
            g(graph, t) for t in skip_triples(eps)
        )


class TestCertificate:
    """G = 2χ + 5m - 4 인증"""

    def test_sphere_all_routes(self, sphere4):
        cert = genus_certificate(sphere4, 0, BettiVector(entries=(1, 0, 0, 0, 1)))
        assert cert.genus == 0
        assert cert.routes == [
            CertificateRoute.WEAK_SEMI_SIMPLE,
            CertificateRoute.VERTEX_BOUND,
            CertificateRoute.NOVIK_SWARTZ_EQUALITY,
        ]

    def test_dipole(self, dipole01):
        cert = genus_certificate(dipole01, 0)
        assert cert.genus == 0
        assert cert.route == CertificateRoute.WEAK_SEMI_SIMPLE
        assert cert.routes == [CertificateRoute.WEAK_SEMI_SIMPLE, CertificateRoute.VERTEX_BOUND]

    def test_all_dipoles_rank_one(self):
        graph = all_dipoles_sum()
        cert = genus_certificate(graph, 1)
        assert cert.genus == 5
        assert CertificateRoute.VERTEX_BOUND in cert.routes
        assert genus_certificate(graph, 0) is None

    def test_undetermined(self):
        """분류 None, ν 가 꼭짓점 하한 초과 -> None (반증 아님)"""
        assert genus_certificate(star_sum(), 0) is None

    def test_certified_matches_regular_genus(self):
        """인증되면 min 2ρ == 2G"""
        for name, graph in identity_corpus():
            bound = rank_upper_bound(graph)
            for m in range(bound + 1):
                cert = genus_certificate(graph, m)
                if cert is not None:
                    assert regular_genus(graph).regular_genus_times_two == 2 * cert.genus, (name, m)

    def test_lower_bound_never_exceeds_regular_genus(self):
        """모든 일관된 m 에서 2G(χ, m) <= min 2ρ (인증 여부와 무관)"""
        for name, graph in identity_corpus():
            chi = euler_characteristic(graph)
            two_rho = regular_genus(graph).regular_genus_times_two
            for m in range(rank_upper_bound(graph) + 1):
                assert 2 * genus_lower_bound(chi, m) <= two_rho, (name, m)

    def test_inconsistent_rank(self, sphere4):
        with pytest.raises(RankInconsistentError):
            genus_certificate(sphere4, 2)


class TestAdditivity:
    """인증된 두 그래프의 연결합"""

    def test_two_dipoles(self):
        report = additivity_check(dipole((0, 1)), 0, dipole((2, 3)), 0)
        assert report.holds
        assert report.chi_additive
        assert report.summed.genus == 0

    def test_mixed_ranks(self):
        report = additivity_check(all_dipoles_sum(), 1, dipole((1, 4)), 0)
        assert report.holds
        assert report.summed.rank_m == 1
        assert report.summed.genus == report.first.genus + report.second.genus == 5

    def test_pairs_over_certified_corpus(self):
        """인증된 그래프 12 개의 모든 순서쌍"""
        certified = [(dipole(p), 0) for p in combinations(range(5), 2)]
        certified += [(sphere(4), 0), (all_dipoles_sum(), 1)]
        for first, m1 in certified:
            for second, m2 in certified:
                report = additivity_check(first, m1, second, m2)
                assert report.holds
                assert report.summed.genus == report.first.genus + report.second.genus

    def test_uncertified_summand(self, dipole01):
        with pytest.raises(UncertifiedError):
            additivity_check(star_sum(), 0, dipole01, 0)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
