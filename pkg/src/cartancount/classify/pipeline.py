"""
[CC-E002] cartancount.classify.pipeline
류 세기, 스펙트럼 분류, 닫힌 공식 검증 파이프라인

version: 1.2.0
created: 2026-10-17
modified: 2026-10-17
dependencies: structlog>=25.5
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import TYPE_CHECKING

import structlog

from cartancount.classify.report import (
    ClassEntry,
    ClassificationReport,
    FormulaExpectation,
    Realization,
    VerificationCell,
    VerificationReport,
)
from cartancount.core.config import GuardConfig
from cartancount.core.exceptions import GuardExceededError
from cartancount.core.types import CheckStatus
from cartancount.graphs.smoothing import homeo_type
from cartancount.matrices.congruence import enumerate_congruence_classes
from cartancount.matrices.invariants import block_normal_form
from cartancount.matrices.partitions import partition_count
from cartancount.permutations.models import Params
from cartancount.permutations.oracle import double_coset_classes

if TYPE_CHECKING:
    from cartancount.graphs.models import HomeoType
    from cartancount.matrices.models import CongruenceKey, NatMatrix

logger = structlog.get_logger()

FLOOR_FORMULA = "floor_half_n_plus_one"
PARTITION_FORMULA = "partition_2o"
SYMMETRY_CHECK = "symmetry"
ONE_SIDED_CHECK = "one_sided_unique"


def formula_expectation(
    params: Params, *, guards: GuardConfig | None = None
) -> FormulaExpectation | None:  # [CC-E002.1]
    """닫힌 공식이 알려진 모양에서만 기대값을 돌려줍니다: (2,n,1)과 (2,2,o)."""
    if params.m == 2 and params.o == 1:
        return FormulaExpectation(name=FLOOR_FORMULA, expected=params.n // 2 + 1)
    if params.m == 2 and params.n == 2:
        return FormulaExpectation(
            name=PARTITION_FORMULA, expected=partition_count(2 * params.o, guards=guards)
        )
    return None


def _homeo_or_none(matrix: NatMatrix, guards: GuardConfig) -> HomeoType | None:
    try:
        return homeo_type(matrix, guards=guards)
    except GuardExceededError as e:
        logger.warning("homeo_skipped", rows=matrix.rows, cols=matrix.cols, reason=str(e))
        return None


def _oracle_count(
    params: Params, guards: GuardConfig, *, identify_flip: bool = True
) -> tuple[int | None, str]:
    try:
        result = double_coset_classes(params, identify_flip=identify_flip, guards=guards)
    except GuardExceededError as e:
        logger.info("oracle_skipped", params=params.as_dict(), reason=str(e))
        return None, str(e)
    return result.count, ""


def count_cartan_classes(
    params: Params,
    *,
    allow_transpose: bool = True,
    guards: GuardConfig | None = None,
    with_oracle: bool = True,
) -> ClassificationReport:  # [CC-E002.2]
    """M(mo,n,no,m)의 합동류를 열거하고 지문/블록/공식/오라클을 붙입니다.

    Args:
        params: (m, n, o)
        allow_transpose: False면 전치 없는 합동(방향 보존 켤레)으로 셉니다
        guards: 크기 가드. 오라클 가드 초과는 보고서에 skip 사유로 남고,
            지문 가드 초과는 그 류의 homeo를 None으로 둡니다.
        with_oracle: False면 이중 잉여류 오라클을 돌리지 않습니다

    Returns:
        ClassificationReport
    """
    guards = guards or GuardConfig()
    keys = enumerate_congruence_classes(
        params.margin_spec(), allow_transpose=allow_transpose, guards=guards
    )
    two_by_two = params.m == 2 and params.n == 2
    classes = [
        ClassEntry(
            key=key,
            blocks=block_normal_form(key.canonical) if two_by_two else None,
            homeo=_homeo_or_none(key.canonical, guards),
        )
        for key in keys
    ]
    oracle, skipped = (
        _oracle_count(params, guards, identify_flip=allow_transpose)
        if with_oracle
        else (None, "")
    )
    report = ClassificationReport(
        params=params,
        class_count=len(classes),
        classes=classes,
        oracle_count=oracle,
        oracle_skipped=skipped,
        formula=(
            formula_expectation(params, guards=guards)
            if allow_transpose or params.m != params.n
            else None
        ),
    )
    logger.info(
        "cartan_classes_counted",
        params=params.as_dict(),
        classes=report.class_count,
        oracle=oracle,
        consistent=report.consistent,
    )
    return report


def classify_spectra(
    params: Params,
    *,
    allow_transpose: bool = True,
    guards: GuardConfig | None = None,
) -> dict[HomeoType, list[CongruenceKey]]:  # [CC-E002.3]
    """합동류를 위상동형 지문으로 묶습니다. 키는 지문 순서, 값은 표준형 순서.

    Raises:
        GuardExceededError: 어떤 류의 지문이 가드에 걸릴 때
    """
    guards = guards or GuardConfig()
    report = count_cartan_classes(
        params, allow_transpose=allow_transpose, guards=guards, with_oracle=False
    )
    groups: dict[HomeoType, list[CongruenceKey]] = {}
    for entry in report.classes:
        homeo = entry.homeo
        if homeo is None:
            homeo = homeo_type(entry.key.canonical, guards=guards)
        groups.setdefault(homeo, []).append(entry.key)
    return {homeo: groups[homeo] for homeo in sorted(groups, key=lambda h: h.sort_key())}


@dataclass(frozen=True)
class _CellPlan:
    params: Params
    formula_name: str
    expected: int | None = None
    mirror: Params | None = None


def _plan_cells(max_n: int, max_o: int, guards: GuardConfig) -> list[_CellPlan]:
    plans: list[_CellPlan] = []
    for n in range(1, max_n + 1):
        plans.append(_CellPlan(Params(2, n, 1), FLOOR_FORMULA, n // 2 + 1))
    for o in range(1, max_o + 1):
        try:
            expected: int | None = partition_count(2 * o, guards=guards)
        except GuardExceededError:
            expected = None
        plans.append(_CellPlan(Params(2, 2, o), PARTITION_FORMULA, expected))
    for n in range(3, max_n + 1):
        plans.append(_CellPlan(Params(n, 2, 1), SYMMETRY_CHECK, mirror=Params(2, n, 1)))
    for n in range(1, max_n + 1):
        plans.append(_CellPlan(Params(1, n, 1), ONE_SIDED_CHECK, 1))
    return plans


def _count_only(params: Params, guards: GuardConfig) -> int:
    return len(enumerate_congruence_classes(params.margin_spec(), guards=guards))


def _run_cell(plan: _CellPlan, guards: GuardConfig) -> VerificationCell:
    p = plan.params
    cell = VerificationCell(m=p.m, n=p.n, o=p.o, formula_name=plan.formula_name)
    try:
        count = _count_only(p, guards)
        expected = _count_only(plan.mirror, guards) if plan.mirror is not None else plan.expected
    except GuardExceededError as e:
        logger.warning("verify_cell_skipped", params=p.as_dict(), reason=str(e))
        return cell.model_copy(update={"status": CheckStatus.SKIP, "note": str(e)})
    # 오라클 교차 검증은 --force 에서도 oracle_max_points 를 지킴
    oracle, _ = _oracle_count(p, guards.model_copy(update={"force": False}))
    if expected is None:
        status = CheckStatus.SKIP
    elif count == expected and (oracle is None or oracle == count):
        status = CheckStatus.PASS
    else:
        status = CheckStatus.FAIL
        logger.warning(
            "verify_cell_failed", params=p.as_dict(), count=count, expected=expected, oracle=oracle
        )
    return cell.model_copy(
        update={"count": count, "oracle": oracle, "expected": expected, "status": status}
    )


def _realizations(cells: list[VerificationCell]) -> list[Realization]:
    counted = [c for c in cells if c.count is not None and c.formula_name != SYMMETRY_CHECK]
    if not counted:
        return []
    top = max(c.count for c in counted if c.count is not None)
    result = []
    for target in range(1, top + 1):
        witness = min(
            ((c.m, c.n, c.o) for c in counted if c.count == target),
            key=lambda t: (t[0] * t[1] * t[2], t),
            default=None,
        )
        result.append(Realization(target=target, params=witness))
    return result


def verify_formulas(
    max_n: int,
    max_o: int,
    *,
    guards: GuardConfig | None = None,
    threads: int = 1,
) -> VerificationReport:  # [CC-E002.4]
    """닫힌 공식, 대칭, 한쪽 유일성을 격자 위에서 확인합니다.

    칸별 가드 초과는 SKIP으로 남고 전체 실행을 멈추지 않습니다.
    오라클은 force 와 무관하게 oracle_max_points 이하 칸에서만 돌립니다.
    칸은 threads개 작업자로 병렬 실행될 수 있으나 결과 순서는 계획 순서 그대로입니다.
    """
    guards = guards or GuardConfig()
    plans = _plan_cells(max_n, max_o, guards)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            cells = list(pool.map(lambda plan: _run_cell(plan, guards), plans))
    else:
        cells = [_run_cell(plan, guards) for plan in plans]
    report = VerificationReport(
        max_n=max_n, max_o=max_o, cells=cells, realizations=_realizations(cells)
    )
    logger.info(
        "formulas_verified",
        cells=len(cells),
        failed=sum(c.status is CheckStatus.FAIL for c in cells),
        skipped=sum(c.status is CheckStatus.SKIP for c in cells),
    )
    return report
