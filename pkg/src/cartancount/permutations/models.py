"""
[CC-C001] cartancount.permutations.models
차원 강하 파라미터와 m×n×o 삼중 색인 집합의 순열

평탄 색인은 (i,j,k) 사전식이고 k가 가장 빠릅니다: flat = (i·n + j)·o + k (0-기반).
입출력에서만 1-기반을 씁니다.

version: 1.0.0
created: 2026-10-17
modified: 2026-10-17
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from cartancount.core.exceptions import ParamsError, ShapeError
from cartancount.core.types import Images
from cartancount.matrices.models import MarginSpec


@dataclass(frozen=True, slots=True, order=True)
class Params:  # [CC-C001.1]
    """I_{m,n,o}의 파라미터 (모두 1 이상)."""

    m: int
    n: int
    o: int

    def __post_init__(self) -> None:
        if min(self.m, self.n, self.o) < 1:
            raise ParamsError(f"[CC-C001.1] m, n, o는 1 이상이어야 합니다: {self}")

    @property
    def size(self) -> int:
        """m·n·o"""
        return self.m * self.n * self.o

    def flat(self, i: int, j: int, k: int) -> int:  # [CC-C001.2]
        """0-기반 (i,j,k) → 평탄 색인."""
        return (i * self.n + j) * self.o + k

    def triple(self, flat: int) -> tuple[int, int, int]:  # [CC-C001.3]
        """평탄 색인 → 0-기반 (i,j,k)."""
        rest, k = divmod(flat, self.o)
        i, j = divmod(rest, self.n)
        return i, j, k

    def encode(self, i: int, j: int, k: int) -> int:
        """1-기반 (i,j,k) → 평탄 색인 ((i−1)·n + (j−1))·o + (k−1)."""
        if not (1 <= i <= self.m and 1 <= j <= self.n and 1 <= k <= self.o):
            raise ParamsError(f"[CC-C001.2] 범위 밖 삼중 색인: ({i},{j},{k}) / {self}")
        return self.flat(i - 1, j - 1, k - 1)

    def decode(self, flat: int) -> tuple[int, int, int]:
        """평탄 색인 → 1-기반 (i,j,k)."""
        if not 0 <= flat < self.size:
            raise ParamsError(f"[CC-C001.3] 범위 밖 평탄 색인: {flat} / {self}")
        i, j, k = self.triple(flat)
        return i + 1, j + 1, k + 1

    def margin_spec(self) -> MarginSpec:  # [CC-C001.4]
        """축약 행렬이 사는 공간 M(mo, n, no, m)."""
        return MarginSpec(self.m * self.o, self.n, self.n * self.o, self.m)

    def as_dict(self) -> dict[str, int]:
        return {"m": self.m, "n": self.n, "o": self.o}


@dataclass(frozen=True, slots=True)
class TriplePermutation:  # [CC-C001.5]
    """m×n×o 위의 전단사. images[x] = σ(x) (평탄 색인)."""

    params: Params
    images: Images

    def __post_init__(self) -> None:
        size = self.params.size
        if len(self.images) != size or sorted(self.images) != list(range(size)):
            raise ParamsError(f"[CC-C001.5] {size}개 점 위의 전단사가 아닙니다: {self.images}")

    @classmethod
    def identity(cls, params: Params) -> TriplePermutation:
        return cls(params, tuple(range(params.size)))

    @classmethod
    def from_map(cls, params: Params, mapping: Sequence[int]) -> TriplePermutation:
        return cls(params, tuple(int(x) for x in mapping))

    @classmethod
    def flip(cls, params: Params) -> TriplePermutation:  # [CC-C001.6]
        """뒤집기 ν(i,j,k) = (j,i,k). m == n 필요."""
        if params.m != params.n:
            raise ShapeError(f"[CC-C001.6] 뒤집기는 m == n 에서만 정의됩니다: {params}")
        images = []
        for x in range(params.size):
            i, j, k = params.triple(x)
            images.append(params.flat(j, i, k))
        return cls(params, tuple(images))

    def __call__(self, flat: int) -> int:
        return self.images[flat]

    def apply(self, i: int, j: int, k: int) -> tuple[int, int, int]:
        """0-기반 삼중 색인에 적용."""
        return self.params.triple(self.images[self.params.flat(i, j, k)])

    def is_identity(self) -> bool:
        return all(x == y for x, y in enumerate(self.images))


def _require_same_params(first: TriplePermutation, second: TriplePermutation) -> None:
    if first.params != second.params:
        raise ParamsError(
            f"[CC-C001.7] 파라미터가 다릅니다: {first.params} vs {second.params}"
        )


def compose(first: TriplePermutation, second: TriplePermutation) -> TriplePermutation:  # [CC-C001.7]
    """first ∘ second (second를 먼저 적용)."""
    _require_same_params(first, second)
    outer = first.images
    return TriplePermutation(first.params, tuple(outer[y] for y in second.images))


def invert(perm: TriplePermutation) -> TriplePermutation:  # [CC-C001.8]
    """역순열."""
    inverse = [0] * len(perm.images)
    for x, y in enumerate(perm.images):
        inverse[y] = x
    return TriplePermutation(perm.params, tuple(inverse))
