"""
[CC-C005] cartancount.permutations.textio
순열 텍스트 형식: 첫 줄 "m n o", 둘째 줄 1-기반 상(image) 목록 또는 순환 표기

예) "2 2 1\\n2 1 3 4\\n" 또는 "2 2 1\\n(1 2)\\n"

version: 1.0.0
created: 2026-10-17
modified: 2026-10-17
"""

from __future__ import annotations

import re

from cartancount.core.exceptions import CartanCountError, FormatError
from cartancount.permutations.models import Params, TriplePermutation

_CYCLE = re.compile(r"\(([^()]*)\)")


def format_permutation(perm: TriplePermutation) -> str:  # [CC-C005.1]
    p = perm.params
    images = " ".join(str(y + 1) for y in perm.images)
    return f"{p.m} {p.n} {p.o}\n{images}\n"


def to_cycles(perm: TriplePermutation) -> str:  # [CC-C005.2]
    """1-기반 순환 표기. 고정점은 생략하고 항등이면 "()"."""
    seen: set[int] = set()
    cycles: list[str] = []
    for start in range(len(perm.images)):
        if start in seen or perm.images[start] == start:
            continue
        cycle = []
        x = start
        while x not in seen:
            seen.add(x)
            cycle.append(str(x + 1))
            x = perm.images[x]
        cycles.append("(" + " ".join(cycle) + ")")
    return "".join(cycles) or "()"


def _from_cycles(params: Params, body: str) -> TriplePermutation:
    images = list(range(params.size))
    stripped = _CYCLE.sub("", body).strip()
    if stripped:
        raise FormatError(f"[CC-C005.3] 순환 표기 밖의 토큰: {stripped!r}")
    touched: set[int] = set()
    for group in _CYCLE.findall(body):
        points = [int(tok) - 1 for tok in group.split()]
        for x in points:
            if not 0 <= x < params.size or x in touched:
                raise FormatError(f"[CC-C005.3] 잘못된 순환 원소: {x + 1}")
            touched.add(x)
        for a, b in zip(points, points[1:] + points[:1], strict=True):
            images[a] = b
    return TriplePermutation(params, tuple(images))


def parse_permutation(text: str) -> TriplePermutation:  # [CC-C005.3]
    """텍스트 형식 순열을 읽습니다. 형식 위반은 FormatError."""
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if not lines:
        raise FormatError("[CC-C005.3] 빈 입력")
    try:
        m, n, o = (int(x) for x in lines[0].split())
        params = Params(m, n, o)
        body = " ".join(lines[1:])
        if "(" in body:
            return _from_cycles(params, body)
        images = tuple(int(x) - 1 for x in body.split())
        return TriplePermutation(params, images)
    except ValueError as e:
        raise FormatError(f"[CC-C005.3] 정수가 아닌 토큰: {e}") from e
    except FormatError:
        raise
    except CartanCountError as e:
        raise FormatError(f"[CC-C005.3] {e}") from e
