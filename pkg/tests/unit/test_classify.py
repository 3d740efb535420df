"""
[CC-T005] tests.unit.test_classify
켤레류 세기 파이프라인, 스펙트럼 분류, 공식 검증 보고서 단위 테스트

version: 1.1.0
created: 2026-10-17
"""

import pytest
from pydantic import ValidationError

from cartancount.classify.pipeline import (
    FLOOR_FORMULA,
    ONE_SIDED_CHECK,
    PARTITION_FORMULA,
    SYMMETRY_CHECK,
    classify_spectra,
    count_cartan_classes,
    formula_expectation,
    verify_formulas,
)
from cartancount.classify.report import CSV_COLUMNS, ClassificationReport, report_to_csv_rows
from cartancount.core.config import GuardConfig
from cartancount.core.exceptions import GuardExceededError
from cartancount.core.types import CheckStatus
from cartancount.matrices.models import BlockProfile
from cartancount.permutations.models import Params
from cartancount.permutations.reduced import reduced_matrix


class TestFormulaExpectation:  # [CC-T005.1]
    @pytest.mark.parametrize(
        ("params", "name", "expected"),
        [
            (Params(2, 1, 1), FLOOR_FORMULA, 1),
            (Params(2, 4, 1), FLOOR_FORMULA, 3),
            (Params(2, 7, 1), FLOOR_FORMULA, 4),
            (Params(2, 2, 2), PARTITION_FORMULA, 5),
            (Params(2, 2, 3), PARTITION_FORMULA, 11),
            (Params(2, 2, 4), PARTITION_FORMULA, 22),
        ],
    )
    def test_known_shapes(self, params, name, expected):
        formula = formula_expectation(params)
        assert formula is not None
        assert formula.name == name
        assert formula.expected == expected

    @pytest.mark.parametrize("params", [Params(3, 3, 1), Params(2, 3, 2), Params(1, 4, 1)])
    def test_unknown_shapes(self, params):
        assert formula_expectation(params) is None


class TestCountCartanClasses:  # [CC-T005.2]
    def test_two_by_two(self):
        report = count_cartan_classes(Params(2, 2, 1))
        assert report.class_count == 2
        assert report.oracle_count == 2
        assert report.formula is not None
        assert report.formula.expected == 2
        assert report.consistent

    def test_oracle_skipped_over_guard(self):
        report = count_cartan_classes(Params(2, 5, 1))
        assert report.class_count == 3
        assert report.oracle_count is None
        assert "oracle_max_points" in report.oracle_skipped
        assert report.consistent

    def test_depth_two_has_blocks(self):
        report = count_cartan_classes(Params(2, 2, 2))
        assert report.class_count == 5
        assert report.oracle_count == 5
        profiles = {entry.blocks for entry in report.classes}
        assert profiles == {
            BlockProfile.of(p) for p in [(4,), (1, 3), (2, 2), (1, 1, 2), (1, 1, 1, 1)]
        }

    def test_blocks_only_for_two_by_two(self):
        report = count_cartan_classes(Params(2, 3, 1), with_oracle=False)
        assert all(entry.blocks is None for entry in report.classes)

    def test_one_sided_unique(self):
        for n in range(1, 6):
            assert count_cartan_classes(Params(1, n, 1), with_oracle=False).class_count == 1

    @pytest.mark.timeout(30)
    @pytest.mark.parametrize("params", [Params(1, 9, 1), Params(9, 1, 1)])
    def test_star_shapes_count_one(self, params):
        """별 모양 스펙트럼 그래프도 기본 가드 안에서 한 류로 셉니다."""
        report = count_cartan_classes(params, with_oracle=False)
        assert report.class_count == 1
        assert report.classes[0].homeo is not None

    def test_homeo_guard_does_not_fail_count(self):
        """지문 계산이 가드에 걸려도 개수는 나오고 지문만 비어 있습니다."""
        tight = GuardConfig(canonical_node_budget=1)
        baseline = count_cartan_classes(Params(3, 3, 1), with_oracle=False)
        report = count_cartan_classes(Params(3, 3, 1), guards=tight, with_oracle=False)
        assert report.class_count == baseline.class_count
        full = next(e for e in report.classes if set(e.key.canonical.entries) == {1})
        assert full.homeo is None
        assert report.to_json()["classes"][report.classes.index(full)]["homeo"] is None

    def test_symmetry(self):
        for n in range(3, 6):
            left = count_cartan_classes(Params(n, 2, 1), with_oracle=False).class_count
            right = count_cartan_classes(Params(2, n, 1), with_oracle=False).class_count
            assert left == right

    def test_orientation_preserving(self):
        """전치를 빼고 세면 공식은 붙지 않고 오라클은 뒤집기 없이 돕니다."""
        report = count_cartan_classes(Params(2, 2, 1), allow_transpose=False)
        assert report.class_count == 2
        assert report.oracle_count == 2
        assert report.formula is None

    def test_witness_lifts_representative(self):
        params = Params(2, 2, 2)
        report = count_cartan_classes(params, with_oracle=False)
        for index, entry in enumerate(report.classes):
            assert reduced_matrix(report.witness(index)) == entry.key.canonical

    def test_json_shape(self):
        data = count_cartan_classes(Params(2, 2, 1)).to_json()
        assert data["params"] == {"m": 2, "n": 2, "o": 1}
        assert data["class_count"] == 2
        assert data["oracle_count"] == 2
        assert data["formula"] == {"name": FLOOR_FORMULA, "expected": 2}
        first = data["classes"][0]
        assert first["canonical"] == [[0, 2], [2, 0]]
        assert first["homeo"] == {"circles": 2, "core": {"vertices": 0, "edges": []}}
        assert first["blocks"] == [1, 1]

    def test_count_mismatch_rejected(self):
        with pytest.raises(ValidationError):
            ClassificationReport(params=Params(2, 2, 1), class_count=3, classes=[])


class TestClassifySpectra:  # [CC-T005.3]
    def test_depth_two_merges_one_pair(self):
        """(2,2,2): 5류가 4개 지문으로, 원 2개짜리에 두 류."""
        groups = classify_spectra(Params(2, 2, 2))
        assert len(groups) == 4
        assert sum(len(keys) for keys in groups.values()) == 5
        assert [h.circle_count for h in groups] == [1, 2, 3, 4]
        assert all(h.core.vertex_count == 0 for h in groups)
        shared = next(keys for h, keys in groups.items() if h.circle_count == 2)
        assert len(shared) == 2

    @pytest.mark.parametrize("params", [Params(2, 3, 1), Params(2, 5, 1), Params(3, 3, 1)])
    def test_faithful_shapes_are_singletons(self, params):
        groups = classify_spectra(params)
        assert all(len(keys) == 1 for keys in groups.values())

    def test_one_sided(self):
        groups = classify_spectra(Params(1, 4, 1))
        assert len(groups) == 1

    @pytest.mark.timeout(30)
    def test_star_shape(self):
        groups = classify_spectra(Params(1, 9, 1))
        assert len(groups) == 1
        assert [len(keys) for keys in groups.values()] == [1]

    def test_guard_on_homeo_raises(self):
        with pytest.raises(GuardExceededError) as exc_info:
            classify_spectra(Params(3, 3, 1), guards=GuardConfig(canonical_node_budget=1))
        assert exc_info.value.bound == "canonical_node_budget"


class TestVerifyFormulas:  # [CC-T005.4]
    @pytest.mark.timeout(120)
    def test_small_grid_passes(self):
        report = verify_formulas(4, 2)
        assert report.all_passed
        assert len(report.cells) == 12
        assert {c.formula_name for c in report.cells} == {
            FLOOR_FORMULA,
            PARTITION_FORMULA,
            SYMMETRY_CHECK,
            ONE_SIDED_CHECK,
        }
        targets = {r.target: r.params for r in report.realizations}
        assert targets == {1: (1, 1, 1), 2: (2, 2, 1), 3: (2, 4, 1), 4: None, 5: (2, 2, 2)}

    def test_csv_rows(self):
        rows = report_to_csv_rows(verify_formulas(2, 1))
        assert rows[0] == list(CSV_COLUMNS)
        assert ["2", "2", "1", "2", "2", FLOOR_FORMULA, "2", "PASS"] in rows
        assert ["2", "2", "1", "2", "2", PARTITION_FORMULA, "2", "PASS"] in rows

    def test_guard_marks_skip(self):
        report = verify_formulas(2, 1, guards=GuardConfig(max_matrix_cells=3))
        status = {(c.m, c.n, c.o, c.formula_name): c.status for c in report.cells}
        assert status[(2, 1, 1, FLOOR_FORMULA)] is CheckStatus.PASS
        assert status[(2, 2, 1, FLOOR_FORMULA)] is CheckStatus.SKIP
        assert status[(2, 2, 1, PARTITION_FORMULA)] is CheckStatus.SKIP
        assert status[(1, 2, 1, ONE_SIDED_CHECK)] is CheckStatus.PASS
        assert report.all_passed

    def test_threads_keep_order(self):
        serial = verify_formulas(3, 1)
        parallel = verify_formulas(3, 1, threads=3)
        assert parallel.cells == serial.cells

    @pytest.mark.timeout(60)
    @pytest.mark.parametrize(("n", "expected"), [(7, 4), (8, 5)])
    def test_floor_family_extends(self, n, expected):
        report = count_cartan_classes(Params(2, n, 1), with_oracle=False)
        assert report.class_count == expected
        assert report.formula is not None
        assert report.formula.expected == expected

    @pytest.mark.timeout(300)
    def test_forced_run_skips_large_oracles(self):
        """--force 여도 oracle_max_points 를 넘는 칸은 오라클 없이 검증합니다."""
        report = verify_formulas(2, 3, guards=GuardConfig(force=True))
        cells = {(c.m, c.n, c.o, c.formula_name): c for c in report.cells}
        deep = cells[(2, 2, 3, PARTITION_FORMULA)]
        assert deep.oracle is None
        assert deep.count == 11
        assert deep.status is CheckStatus.PASS
        assert cells[(2, 2, 1, FLOOR_FORMULA)].oracle == 2
        assert report.all_passed
