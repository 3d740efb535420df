"""
[CC-C002] cartancount.permutations.reduced
축약 행렬, 행렬의 순열 들어올리기, 뒤집기 공액

version: 1.0.0
created: 2026-10-17
modified: 2026-10-17
"""

from __future__ import annotations

from cartancount.core.exceptions import ShapeError
from cartancount.matrices.models import NatMatrix
from cartancount.permutations.models import Params, TriplePermutation, compose, invert


def reduced_matrix(perm: TriplePermutation) -> NatMatrix:  # [CC-C002.1]
    """σ의 축약 행렬: (mo)×(no), 행 (i,k), 열 (j',k') 사전식.

    A[(i,k),(j',k')] = #{i' : σ(i',j',k') ∈ {(i,·,k)}}
    결과는 항상 M(mo, n, no, m)에 속합니다.
    """
    p = perm.params
    rows, cols = p.m * p.o, p.n * p.o
    entries = [0] * (rows * cols)
    for source, target in enumerate(perm.images):
        _i_src, j_src, k_src = p.triple(source)
        i_tgt, _j_tgt, k_tgt = p.triple(target)
        entries[(i_tgt * p.o + k_tgt) * cols + (j_src * p.o + k_src)] += 1
    return NatMatrix(rows, cols, tuple(entries))


def lift_matrix(matrix: NatMatrix, params: Params) -> TriplePermutation:  # [CC-C002.2]
    """A ∈ M(mo,n,no,m)를 축약 행렬로 갖는 순열을 블록 구성으로 만듭니다.

    블록 ((i,k),(j',k'))의 성분 a에 대해
      r = Σ_{(t,u)<(i,k)} A[(t,u),(j',k')]   (같은 열 블록에서 위쪽 누적)
      s = Σ_{(t,u)<(j',k')} A[(i,k),(t,u)]   (같은 행 블록에서 왼쪽 누적)
    이고 t < a 마다 (r+t, j', k') ↦ (i, s+t, k) 로 보냅니다.
    열 합이 m, 행 합이 n 이므로 구간들이 서로소로 전체를 덮어 전단사가 됩니다.
    """
    params.margin_spec().require(matrix)
    p = params
    images = [-1] * p.size
    col_offsets = [0] * matrix.cols
    for row in range(matrix.rows):
        i, k = divmod(row, p.o)
        s = 0
        for col in range(matrix.cols):
            a = matrix[row, col]
            if a:
                j_src, k_src = divmod(col, p.o)
                r = col_offsets[col]
                for t in range(a):
                    images[p.flat(r + t, j_src, k_src)] = p.flat(i, s + t, k)
                col_offsets[col] = r + a
                s += a
    return TriplePermutation(p, tuple(images))


def flip_conjugate(perm: TriplePermutation) -> TriplePermutation:  # [CC-C002.3]
    """ν ∘ σ⁻¹ ∘ ν. 축약 행렬이 전치됩니다. m ≠ n 이면 ShapeError."""
    if perm.params.m != perm.params.n:
        raise ShapeError(f"[CC-C002.3] 뒤집기 공액은 m == n 에서만 정의됩니다: {perm.params}")
    nu = TriplePermutation.flip(perm.params)
    return compose(nu, compose(invert(perm), nu))
