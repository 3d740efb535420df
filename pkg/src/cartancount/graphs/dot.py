"""
[CC-D005] cartancount.graphs.dot
DOT 텍스트와 JSON 그래프 형식 출력 (결정적 순서)

version: 1.0.0
created: 2026-10-17
modified: 2026-10-17
"""

from __future__ import annotations

from typing import Any

from cartancount.graphs.models import BipartiteMultigraph, Multigraph


def to_dot(graph: BipartiteMultigraph | Multigraph, name: str = "G") -> str:  # [CC-D005.1]
    """무향 DOT 그래프. 평행 간선은 줄을 반복합니다.

    이분 그래프는 행 꼭짓점 r1..rA, 열 꼭짓점 c1..cC, 일반 다중그래프는 v1..vV.
    """
    if isinstance(graph, BipartiteMultigraph):
        labels = [graph.label(v) for v in range(graph.vertex_count)]
        edges = graph.iter_edges()
    else:
        labels = [f"v{v + 1}" for v in range(graph.vertex_count)]
        edges = list(graph.edges)
    lines = [f"graph {name} {{"]
    lines.extend(f"  {label};" for label in labels)
    lines.extend(f"  {labels[u]} -- {labels[v]};" for u, v in edges)
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_to_json(graph: BipartiteMultigraph) -> dict[str, Any]:  # [CC-D005.2]
    """{"rows": A, "cols": C, "mult": [[...]]}"""
    return {
        "rows": graph.row_count,
        "cols": graph.col_count,
        "mult": graph.multiplicity.to_rows(),
    }
