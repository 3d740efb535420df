"""
[CC-B005] cartancount.matrices.partitions
분할수 p(k) - 오일러 오각수 점화식 + 전수 분할 생성기(오라클)

version: 1.0.0
created: 2026-10-17
modified: 2026-10-17
"""

from __future__ import annotations

from collections.abc import Iterator

from cartancount.core.config import GuardConfig


def partition_count(k: int, *, guards: GuardConfig | None = None) -> int:  # [CC-B005.1]
    """k의 정수 분할 개수. p(0) = 1.

    p(n) = Σ_{g≥1} (-1)^{g+1} [p(n - g(3g-1)/2) + p(n - g(3g+1)/2)]
    """
    if k < 0:
        raise ValueError(f"[CC-B005.1] 음수의 분할수는 정의되지 않습니다: {k}")
    (guards or GuardConfig()).enforce("partition_bound", k, detail="분할수 인자")
    table = [1] + [0] * k
    for n in range(1, k + 1):
        total = 0
        g = 1
        while True:
            first = n - g * (3 * g - 1) // 2
            if first < 0:
                break
            sign = 1 if g % 2 else -1
            total += sign * table[first]
            second = n - g * (3 * g + 1) // 2
            if second >= 0:
                total += sign * table[second]
            g += 1
        table[n] = total
    return table[k]


def iter_partitions(k: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:  # [CC-B005.2]
    """k의 분할을 비증가 부분 튜플로 전부 생성합니다."""
    if k == 0:
        yield ()
        return
    cap = k if largest is None else min(largest, k)
    for part in range(cap, 0, -1):
        for rest in iter_partitions(k - part, part):
            yield (part, *rest)
