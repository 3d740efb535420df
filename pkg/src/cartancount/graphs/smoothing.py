"""
[CC-D004] cartancount.graphs.smoothing
차수 2 꼭짓점 억제(매끄럽게 하기)와 위상동형 지문

모든 꼭짓점의 차수가 2인 성분은 원 하나로 셉니다. 나머지에서는 고리가 없는 차수 2 꼭짓점을
하나씩 지우고 두 이웃을 간선 하나로 잇습니다 (두 이웃이 같으면 고리).

version: 1.0.0
created: 2026-10-17
modified: 2026-10-17
dependencies: networkx>=3.4, structlog>=25.5
"""

from __future__ import annotations

from collections.abc import Sequence

import networkx as nx
import structlog

from cartancount.core.config import GuardConfig
from cartancount.core.exceptions import ShapeError
from cartancount.graphs.canonical import canonical_multigraph
from cartancount.graphs.construct import graph_from_matrix, to_networkx
from cartancount.graphs.models import BipartiteMultigraph, HomeoType, Multigraph
from cartancount.matrices.models import NatMatrix
from cartancount.permutations.models import Params

logger = structlog.get_logger()


def _suppressible(graph: nx.MultiGraph, vertex: int) -> bool:
    return graph.degree(vertex) == 2 and not graph.has_edge(vertex, vertex)


def _suppress(graph: nx.MultiGraph, vertex: int) -> None:
    first, second = (u for _, u in graph.edges(vertex))
    graph.remove_node(vertex)
    graph.add_edge(first, second)


def _relabel(graph: nx.MultiGraph) -> Multigraph:
    position = {v: idx for idx, v in enumerate(sorted(graph.nodes))}
    return Multigraph.from_edges(
        len(position), ((position[u], position[v]) for u, v in graph.edges())
    )


def suppress_vertex(graph: Multigraph, vertex: int) -> Multigraph:  # [CC-D004.1]
    """매끄럽게 하기 한 단계. 꼭짓점 수와 간선 수가 각각 1씩 줄어듭니다.

    vertex보다 큰 꼭짓점 번호는 하나씩 당겨집니다.

    Raises:
        ShapeError: vertex가 고리 없는 차수 2 꼭짓점이 아닐 때
    """
    nx_graph = to_networkx(graph)
    if vertex not in nx_graph or not _suppressible(nx_graph, vertex):
        raise ShapeError(f"[CC-D004.1] 억제할 수 없는 꼭짓점: {vertex}")
    _suppress(nx_graph, vertex)
    return _relabel(nx_graph)


def smooth_multigraph(
    graph: Multigraph | BipartiteMultigraph,
    order: Sequence[int] | None = None,
    *,
    guards: GuardConfig | None = None,
) -> HomeoType:  # [CC-D004.2]
    """원 성분을 세고 나머지를 끝까지 매끄럽게 한 뒤 표준형으로 돌려줍니다.

    Args:
        graph: 입력 그래프
        order: 억제 우선순위 (꼭짓점 번호의 순열). None이면 작은 번호 먼저.
        guards: 표준형 탐색 예산

    Returns:
        HomeoType(circle_count, core)
    """
    nx_graph = to_networkx(graph)
    rank = {v: v for v in nx_graph.nodes}
    if order is not None:
        if sorted(order) != sorted(nx_graph.nodes):
            raise ShapeError("[CC-D004.2] order는 꼭짓점 번호의 순열이어야 합니다")
        rank = {v: pos for pos, v in enumerate(order)}

    circles = 0
    for component in list(nx.connected_components(nx_graph)):
        if all(nx_graph.degree(v) == 2 for v in component):
            circles += 1
            nx_graph.remove_nodes_from(component)

    suppressed = 0
    while True:
        eligible = [v for v in nx_graph.nodes if _suppressible(nx_graph, v)]
        if not eligible:
            break
        _suppress(nx_graph, min(eligible, key=rank.__getitem__))
        suppressed += 1

    core = canonical_multigraph(_relabel(nx_graph), guards=guards)
    logger.debug(
        "smoothing_done", circles=circles, suppressed=suppressed, core_vertices=core.vertex_count
    )
    return HomeoType(circles, core)


def smooth(graph: BipartiteMultigraph, *, guards: GuardConfig | None = None) -> HomeoType:  # [CC-D004.3]
    """이분 다중그래프의 위상동형 지문 (작은 번호 먼저 억제)."""
    return smooth_multigraph(graph, guards=guards)


def homeo_type(matrix: NatMatrix, *, guards: GuardConfig | None = None) -> HomeoType:  # [CC-D004.4]
    """smooth(graph_from_matrix(A))"""
    return smooth(graph_from_matrix(matrix), guards=guards)


def faithful_regime(params: Params) -> bool:  # [CC-D004.5]
    """위상동형 지문이 합동류를 완전히 구별하는 영역: (m, n) ≠ (2, 2) 또는 o = 1.

    m = 1 또는 n = 1 이면 류가 하나뿐이라 자명하게 성립합니다.
    """
    return params.o == 1 or (params.m, params.n) != (2, 2)
