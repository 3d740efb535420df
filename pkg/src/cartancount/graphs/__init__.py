"""
[CC-D000] cartancount.graphs
스펙트럼 모델: 이분 다중그래프, 동형 판정, 매끄럽게 하기, 위상동형 지문

version: 1.0.0
created: 2026-10-17
modified: 2026-10-17
"""

from cartancount.graphs.canonical import are_isomorphic, canonical_multigraph
from cartancount.graphs.construct import (
    connected_components,
    graph_from_matrix,
    spectrum_graph,
    to_networkx,
)
from cartancount.graphs.dot import graph_to_json, to_dot
from cartancount.graphs.models import BipartiteMultigraph, HomeoType, Multigraph
from cartancount.graphs.smoothing import (
    faithful_regime,
    homeo_type,
    smooth,
    smooth_multigraph,
    suppress_vertex,
)

__all__ = [
    "BipartiteMultigraph",
    "HomeoType",
    "Multigraph",
    "are_isomorphic",
    "canonical_multigraph",
    "connected_components",
    "faithful_regime",
    "graph_from_matrix",
    "graph_to_json",
    "homeo_type",
    "smooth",
    "smooth_multigraph",
    "spectrum_graph",
    "suppress_vertex",
    "to_dot",
    "to_networkx",
]
