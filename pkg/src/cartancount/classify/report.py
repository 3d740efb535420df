"""
[CC-E001] cartancount.classify.report
분류/검증 보고서 모델과 JSON·CSV 직렬화

version: 1.0.1
created: 2026-10-17
modified: 2026-10-17
dependencies: pydantic>=2.12
"""

from __future__ import annotations

from typing import Any

from pydantic import BaseModel, ConfigDict, Field, model_validator

from cartancount.core.types import CheckStatus
from cartancount.graphs.models import HomeoType
from cartancount.matrices.models import BlockProfile, CongruenceKey
from cartancount.permutations.models import Params, TriplePermutation
from cartancount.permutations.reduced import lift_matrix

CSV_COLUMNS = ("m", "n", "o", "count", "oracle", "formula_name", "expected", "status")


class FormulaExpectation(BaseModel):  # [CC-E001.1]
    """닫힌 공식이 예측하는 류의 개수."""

    model_config = ConfigDict(frozen=True)

    name: str
    expected: int


class ClassEntry(BaseModel):  # [CC-E001.2]
    """합동류 하나: 표준 대표, (2,2,o)이면 블록 프로파일, 위상동형 지문.

    지문 계산이 가드에 걸리면 homeo는 None입니다.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    key: CongruenceKey
    blocks: BlockProfile | None = None
    homeo: HomeoType | None = None

    def to_json(self) -> dict[str, Any]:
        homeo: dict[str, Any] | None = None
        if self.homeo is not None:
            core = self.homeo.core
            homeo = {
                "circles": self.homeo.circle_count,
                "core": {
                    "vertices": core.vertex_count,
                    "edges": [list(edge) for edge in core.edges],
                },
            }
        return {
            "canonical": self.key.canonical.to_rows(),
            "homeo": homeo,
            "blocks": list(self.blocks.sizes) if self.blocks is not None else None,
        }


class ClassificationReport(BaseModel):  # [CC-E001.3]
    """I_{m,n,o}의 비퇴화 카르탄 부분대수 켤레류 = M(mo,n,no,m)의 합동류."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    params: Params
    class_count: int = Field(ge=1)
    classes: list[ClassEntry]
    oracle_count: int | None = None
    oracle_skipped: str = ""
    formula: FormulaExpectation | None = None

    @model_validator(mode="after")
    def _check_count(self) -> ClassificationReport:
        if self.class_count != len(self.classes):
            raise ValueError(
                f"[CC-E001.3] class_count {self.class_count} != 류 목록 길이 {len(self.classes)}"
            )
        return self

    @property
    def consistent(self) -> bool:  # [CC-E001.4]
        """오라클/공식 값이 있으면 class_count와 같은지."""
        if self.oracle_count is not None and self.oracle_count != self.class_count:
            return False
        return self.formula is None or self.formula.expected == self.class_count

    def witness(self, index: int) -> TriplePermutation:  # [CC-E001.5]
        """index번째 류의 대표 행렬을 순열로 들어올립니다."""
        return lift_matrix(self.classes[index].key.canonical, self.params)

    def to_json(self) -> dict[str, Any]:  # [CC-E001.6]
        return {
            "params": self.params.as_dict(),
            "class_count": self.class_count,
            "oracle_count": self.oracle_count,
            "formula": self.formula.model_dump() if self.formula is not None else None,
            "classes": [entry.to_json() for entry in self.classes],
        }


class VerificationCell(BaseModel):  # [CC-E001.7]
    """공식 검증 격자의 한 칸."""

    m: int
    n: int
    o: int
    count: int | None = None
    oracle: int | None = None
    formula_name: str
    expected: int | None = None
    status: CheckStatus = CheckStatus.SKIP
    note: str = ""

    def csv_row(self) -> list[str]:
        values = (self.m, self.n, self.o, self.count, self.oracle, self.formula_name, self.expected)
        return [*("" if v is None else str(v) for v in values), self.status.value]


class Realization(BaseModel):  # [CC-E001.8]
    """목표 류 개수 target을 실현하는 격자 원소 (없으면 None)."""

    target: int
    params: tuple[int, int, int] | None = None


class VerificationReport(BaseModel):  # [CC-E001.9]
    max_n: int
    max_o: int
    cells: list[VerificationCell] = Field(default_factory=list)
    realizations: list[Realization] = Field(default_factory=list)

    @property
    def all_passed(self) -> bool:
        """FAIL 칸이 없으면 True (SKIP은 실패가 아님)."""
        return all(cell.status is not CheckStatus.FAIL for cell in self.cells)


def report_to_csv_rows(report: VerificationReport) -> list[list[str]]:  # [CC-E001.10]
    """헤더 + 칸마다 한 줄. 열: m,n,o,count,oracle,formula_name,expected,status"""
    return [list(CSV_COLUMNS), *(cell.csv_row() for cell in report.cells)]
