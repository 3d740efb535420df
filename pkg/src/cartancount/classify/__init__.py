"""
[CC-E000] cartancount.classify
류 세기, 스펙트럼 분류, 공식 검증 보고서

version: 1.0.0
created: 2026-10-17
modified: 2026-10-17
"""

from cartancount.classify.pipeline import (
    classify_spectra,
    count_cartan_classes,
    formula_expectation,
    verify_formulas,
)
from cartancount.classify.report import (
    CSV_COLUMNS,
    ClassEntry,
    ClassificationReport,
    FormulaExpectation,
    Realization,
    VerificationCell,
    VerificationReport,
    report_to_csv_rows,
)

__all__ = [
    "CSV_COLUMNS",
    "ClassEntry",
    "ClassificationReport",
    "FormulaExpectation",
    "Realization",
    "VerificationCell",
    "VerificationReport",
    "classify_spectra",
    "count_cartan_classes",
    "formula_expectation",
    "report_to_csv_rows",
    "verify_formulas",
]
