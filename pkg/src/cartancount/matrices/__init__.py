"""
[CC-B000] cartancount.matrices
행/열 합 고정 행렬 열거, 합동 표준화, 닫힌 형태 불변량

version: 1.0.0
created: 2026-10-17
modified: 2026-10-17
"""

from cartancount.matrices.congruence import (
    are_congruent,
    canonical_form,
    canonical_form_exhaustive,
    congruence_key,
    enumerate_congruence_classes,
)
from cartancount.matrices.enumerate import enumerate_margin_matrices, iter_margin_matrices
from cartancount.matrices.invariants import (
    block_normal_form,
    normal_form_matrix,
    two_entry_invariant,
    two_entry_normal_form,
)
from cartancount.matrices.models import BlockProfile, CongruenceKey, MarginSpec, NatMatrix
from cartancount.matrices.partitions import iter_partitions, partition_count
from cartancount.matrices.textio import class_to_json, format_matrix, parse_matrix

__all__ = [
    "BlockProfile",
    "CongruenceKey",
    "MarginSpec",
    "NatMatrix",
    "are_congruent",
    "block_normal_form",
    "canonical_form",
    "canonical_form_exhaustive",
    "class_to_json",
    "congruence_key",
    "enumerate_congruence_classes",
    "enumerate_margin_matrices",
    "format_matrix",
    "iter_margin_matrices",
    "iter_partitions",
    "normal_form_matrix",
    "parse_matrix",
    "partition_count",
    "two_entry_invariant",
    "two_entry_normal_form",
]
