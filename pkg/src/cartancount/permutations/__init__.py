"""
[CC-C000] cartancount.permutations
삼중 색인 순열, 축약 행렬, 화환곱 부분군, 이중 잉여류 오라클

version: 1.0.0
created: 2026-10-17
modified: 2026-10-17
"""

from cartancount.permutations.models import Params, TriplePermutation, compose, invert
from cartancount.permutations.oracle import DoubleCosetResult, UnionFind, double_coset_classes
from cartancount.permutations.reduced import flip_conjugate, lift_matrix, reduced_matrix
from cartancount.permutations.textio import format_permutation, parse_permutation, to_cycles
from cartancount.permutations.wreath import generated_subgroup, wreath_generators, wreath_order

__all__ = [
    "DoubleCosetResult",
    "Params",
    "TriplePermutation",
    "UnionFind",
    "compose",
    "double_coset_classes",
    "flip_conjugate",
    "format_permutation",
    "generated_subgroup",
    "invert",
    "lift_matrix",
    "parse_permutation",
    "reduced_matrix",
    "to_cycles",
    "wreath_generators",
    "wreath_order",
]
