"""
[CC-D002] cartancount.graphs.construct
행렬/순열에서 이분 다중그래프 만들기, 연결 성분

version: 1.0.0
created: 2026-10-17
modified: 2026-10-17
dependencies: networkx>=3.4
"""

from __future__ import annotations

import networkx as nx

from cartancount.graphs.models import BipartiteMultigraph, Multigraph
from cartancount.matrices.models import NatMatrix
from cartancount.permutations.models import TriplePermutation


def graph_from_matrix(matrix: NatMatrix) -> BipartiteMultigraph:  # [CC-D002.1]
    """행 꼭짓점 ↔ 행, 열 꼭짓점 ↔ 열, A[i][j]개의 평행 간선."""
    return BipartiteMultigraph(matrix.rows, matrix.cols, matrix)


def spectrum_graph(perm: TriplePermutation) -> BipartiteMultigraph:  # [CC-D002.2]
    """σ로 꼬인 표준 카르탄 부분대수의 스펙트럼 모델.

    원소 (i',j',k')마다 σ(i',j',k') = (i,j,k) 일 때 행 꼭짓점 (i,k)와
    열 꼭짓점 (j',k')를 간선 하나로 잇습니다. graph_from_matrix(reduced_matrix(σ))와 같습니다.
    """
    p = perm.params
    rows, cols = p.m * p.o, p.n * p.o
    counts = [0] * (rows * cols)
    for source, target in enumerate(perm.images):
        _, j_src, k_src = p.triple(source)
        i_tgt, _, k_tgt = p.triple(target)
        counts[(i_tgt * p.o + k_tgt) * cols + j_src * p.o + k_src] += 1
    return BipartiteMultigraph(rows, cols, NatMatrix(rows, cols, tuple(counts)))


def to_networkx(graph: BipartiteMultigraph | Multigraph) -> nx.MultiGraph:  # [CC-D002.3]
    """networkx MultiGraph로 변환. 꼭짓점은 0..V-1 정수."""
    result = nx.MultiGraph()
    result.add_nodes_from(range(graph.vertex_count))
    if isinstance(graph, BipartiteMultigraph):
        result.add_edges_from(graph.iter_edges())
    else:
        result.add_edges_from(graph.edges)
    return result


def connected_components(graph: BipartiteMultigraph | Multigraph) -> list[frozenset[int]]:  # [CC-D002.4]
    """연결 성분을 (크기, 최소 꼭짓점) 순으로 정렬해 돌려줍니다."""
    components = [frozenset(c) for c in nx.connected_components(to_networkx(graph))]
    return sorted(components, key=lambda c: (len(c), min(c)))
