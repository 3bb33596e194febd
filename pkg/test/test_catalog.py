#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
생성기 (sphere, sum_power, random) / 참조 표 / catalog manifest 검증 테스트
"""
import json

import pytest

from app.core.errors import CatalogError, ConfigInvalidError
from app.core.models import CatalogEntry, ClassificationKind, ColoredGraph
from app.services import cgf
from app.services.catalog import (
    check_row,
    load_manifest,
    random_colored_graph,
    reference_table,
    sphere,
    sum_power,
    verify_catalog,
)
from app.services.colored_graph import is_contracted
from app.services.genus import classify
from conftest import A_MATCHING, B_MATCHING, DATA_DIR, all_dipoles_sum, dipole, star_sum


class TestGenerators:
    """sphere / sum_power / random"""

    def test_sphere_shape(self):
        for d in (2, 3, 4):
            graph = sphere(d)
            assert graph.num_vertices == 2
            assert len(graph.matchings) == d + 1

    def test_sphere_rejects_small_dim(self):
        with pytest.raises(ValueError):
            sphere(1)

    def test_sum_power(self, dipole01):
        assert sum_power(dipole01, 1) == dipole01
        assert sum_power(dipole01, 3).num_vertices == 3 * 4 - 4
        assert sum_power(sphere(4), 4) == sphere(4)
        with pytest.raises(ValueError):
            sum_power(dipole01, 0)

    def test_sum_power_keeps_weak_semi_simple(self, dipole01):
        """m 에서 weak semi-simple 인 그래프의 k 겹 합은 k*m 에서도 weak semi-simple"""
        for k in range(2, 6):
            assert classify(sum_power(dipole01, k), 0).kind == ClassificationKind.WEAK_SEMI_SIMPLE
        for k in range(1, 4):
            result = classify(sum_power(all_dipoles_sum(), k), k)
            assert result.is_weak_semi_simple
            assert result.kind == ClassificationKind.SEMI_SIMPLE

    def test_random_is_deterministic(self):
        assert random_colored_graph(4, 30, seed=11) == random_colored_graph(4, 30, seed=11)
        assert random_colored_graph(4, 30, seed=11) != random_colored_graph(4, 30, seed=12)

    def test_random_shape(self):
        graph = random_colored_graph(3, 14, seed=5)
        assert graph.dim == 3
        assert graph.num_vertices == 14

    def test_random_bad_vertex_count(self):
        with pytest.raises(ConfigInvalidError):
            random_colored_graph(4, 7, seed=0)
        with pytest.raises(ConfigInvalidError):
            random_colored_graph(4, 0, seed=0)


class TestReferenceTable:
    """G = 2χ + 5m - 4 참조 행"""

    def test_known_genera(self):
        genera = {row.name: row.known_genus for row in reference_table()}
        assert genera == {
            "S^4": 0,
            "CP^2": 2,
            "S^2 x S^2": 4,
            "RP^4": 3,
            "RP^2 x S^2": 5,
            "S^3-bundles over S^1": 1,
            "(S^2 x S^1)_f": 6,
            "K3": 44,
        }

    def test_only_sphere_has_graph(self):
        with_graph = [row.name for row in reference_table() if row.graph is not None]
        assert with_graph == ["S^4"]

    def test_every_row_checks(self):
        for row in reference_table():
            assert check_row(row).passed, row.name


class TestCheckRow:
    """그래프가 있는 행의 교차 검증"""

    def test_sphere_row(self, sphere4):
        result = check_row(CatalogEntry(name="S^4", chi=2, rank_m=0, known_genus=0, graph=sphere4))
        assert result.passed
        assert result.checks["certified"]
        assert result.checks["certificate_matches_known_genus"]

    def test_wrong_chi(self, dipole01):
        result = check_row(CatalogEntry(name="bad", chi=3, rank_m=0, graph=dipole01))
        assert not result.passed
        assert not result.checks["chi_matches"]

    def test_uncertified_row(self):
        result = check_row(CatalogEntry(name="star", chi=2, rank_m=0, known_genus=0, graph=star_sum()))
        assert not result.checks["certified"]
        assert "certified" in result.message

    def test_rank_above_bound(self, dipole01):
        result = check_row(CatalogEntry(name="rank", chi=2, rank_m=3, graph=dipole01))
        assert not result.checks["rank_consistent"]
        assert not result.checks["certified"]

    def test_precondition_error(self):
        """contracted 가 아니면 rank 상한 계산이 실패 -> preconditions False"""
        graph = ColoredGraph(dim=4, num_vertices=4, matchings=(B_MATCHING,) + (A_MATCHING,) * 4)
        assert not is_contracted(graph)
        result = check_row(CatalogEntry(name="loose", chi=2, rank_m=0, graph=graph))
        assert result.checks["preconditions"] is False
        assert result.message.startswith("error[NotContracted]")


class TestManifest:
    """JSON manifest 로딩"""

    def test_bundled_catalog(self):
        rows = verify_catalog(DATA_DIR / "catalog.json")
        assert len(rows) == 9
        assert all(row.passed for row in rows), [row.message for row in rows if not row.passed]
        assert [row.name for row in rows if row.has_graph] == ["S^4", "S^4 (four vertices)"]

    def test_relative_cgf_path(self, tmp_path):
        cgf.save(dipole((1, 2)), tmp_path / "graphs" / "d.cgf")
        manifest = tmp_path / "catalog.json"
        manifest.write_text(json.dumps([{"name": "d", "chi": 2, "rank_m": 0, "cgf_path": "graphs/d.cgf"}]))
        entries = load_manifest(manifest)
        assert entries[0].graph == dipole((1, 2))

    def test_missing_manifest(self, tmp_path):
        with pytest.raises(CatalogError):
            load_manifest(tmp_path / "nope.json")

    def test_missing_cgf(self, tmp_path):
        manifest = tmp_path / "catalog.json"
        manifest.write_text(json.dumps({"rows": [{"name": "x", "chi": 2, "rank_m": 0, "cgf_path": "x.cgf"}]}))
        with pytest.raises(CatalogError):
            load_manifest(manifest)

    def test_bad_row(self, tmp_path):
        manifest = tmp_path / "catalog.json"
        manifest.write_text(json.dumps({"rows": [{"name": "x"}]}))
        with pytest.raises(CatalogError):
            load_manifest(manifest)

    def test_not_a_list(self, tmp_path):
        manifest = tmp_path / "catalog.json"
        manifest.write_text(json.dumps({"rows": 3}))
        with pytest.raises(CatalogError):
            load_manifest(manifest)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
