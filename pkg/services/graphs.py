"""The coset graph Γ_m of the Preparata code and its distance-regular parameters."""
import logging
import math
from typing import Dict, List, Optional, Tuple

import networkx as nx
import numpy as np

from core.errors import ParameterError
from models import DrgParameters
from services.codes import _check_m, kerdock_trace_generator

logger = logging.getLogger(__name__)

Vertex = Tuple[int, ...]


def coset_graph(m: int) -> nx.Graph:
    """Vertices are syndromes Hv ∈ ℤ₄^{m+1}; s ~ s ± h_k for every column h_k of H."""
    _check_m(m)
    if m > 5:
        raise ParameterError(f"Γ_m has 4^{m + 1} vertices; m={m} is beyond desk scale")
    H = kerdock_trace_generator(m)
    rows = H.shape[0]
    vertices = np.array(np.meshgrid(*[np.arange(4)] * rows, indexing="ij")).reshape(rows, -1).T
    graph = nx.Graph()
    graph.add_nodes_from(tuple(int(x) for x in v) for v in vertices)
    for column in H.T:
        for step in (1, 3):
            targets = (vertices + step * column) % 4
            graph.add_edges_from(
                (tuple(int(x) for x in u), tuple(int(x) for x in w)) for u, w in zip(vertices, targets)
            )
    logger.info(f"Γ_{m}: {graph.number_of_nodes()} vertices, {graph.number_of_edges()} edges")
    return graph


def bipartition(vertex: Vertex) -> int:
    """ν(s): parity of the all-ones row of H, i.e. of the first syndrome entry."""
    return vertex[0] % 2


def is_bipartite_by_parity(graph: nx.Graph) -> bool:
    return all(bipartition(u) != bipartition(v) for u, v in graph.edges())


def distance_layers(graph: nx.Graph) -> Dict[Vertex, Dict[Vertex, int]]:
    return dict(nx.all_pairs_shortest_path_length(graph))


def intersection_array(graph: nx.Graph, distances: Optional[Dict] = None) -> Tuple[List[int], List[int], List[int]]:
    """(b_j, c_j, a_j) counted directly at every vertex; raises if they vary."""
    distances = distances or distance_layers(graph)
    diameter = max(max(d.values()) for d in distances.values())
    b = [None] * (diameter + 1)
    c = [None] * (diameter + 1)
    a = [None] * (diameter + 1)
    for u, dist_u in distances.items():
        for v, j in dist_u.items():
            counts = [0, 0, 0]
            for w in graph.neighbors(v):
                step = dist_u[w] - j
                counts[step + 1] += 1
            found = (counts[2], counts[0], counts[1])
            expected = (b[j], c[j], a[j])
            if expected[0] is None:
                b[j], c[j], a[j] = found
            elif found != expected:
                raise ArithmeticError(f"graph is not distance regular at distance {j}: {found} != {expected}")
    return b, c, a


def eigenmatrix_from_intersection_array(b: List[int], c: List[int], a: List[int]) -> List[List[int]]:
    """Rows (v_0(θ), …, v_d(θ)) over the eigenvalues θ, largest first.

    v_0 = 1, v_1 = θ and c_{j+1}v_{j+1} = (θ − a_j)v_j − b_{j−1}v_{j−1}.
    """
    d = len(b) - 1
    tridiagonal = np.zeros((d + 1, d + 1))
    for j in range(d + 1):
        tridiagonal[j, j] = a[j]
        if j < d:
            tridiagonal[j, j + 1] = b[j]
            tridiagonal[j + 1, j] = c[j + 1]
    thetas = sorted({int(round(x)) for x in np.linalg.eigvals(tridiagonal).real}, reverse=True)
    rows = []
    for theta in thetas:
        v = [1, theta]
        for j in range(1, d):
            nxt = ((theta - a[j]) * v[j] - b[j - 1] * v[j - 1]) / c[j + 1]
            v.append(nxt)
        rows.append([int(round(x)) for x in v[: d + 1]])
    return rows


def _root_of(big_n: int) -> int:
    root = math.isqrt(big_n)
    if big_n < 4 or big_n & (big_n - 1) or root * root != big_n:
        raise ParameterError(f"N = 2^(m+1) must be an even power of two, got {big_n}")
    return root


def coset_graph_intersection_array(big_n: int) -> Tuple[List[int], List[int], List[int]]:
    """(b_j, c_j, a_j) of Γ_m in closed form, laid out as intersection_array returns them."""
    _root_of(big_n)
    b = [big_n, big_n - 1, big_n - 2, 1, 0]
    c = [0, 1, 2, big_n - 1, big_n]
    return b, c, [0] * 5


def coset_graph_eigenmatrix(big_n: int) -> List[List[int]]:
    """Closed form of the eigenmatrix of Γ_m with N = 2^{m+1}."""
    root = _root_of(big_n)
    half = big_n // 2
    tail = big_n // 2 - 1
    return [
        [1, big_n, big_n * (big_n - 1) // 2, big_n * (big_n - 2) // 2, tail],
        [1, root, 0, -root, -1],
        [1, 0, -half, 0, tail],
        [1, -root, 0, root, -1],
        [1, -big_n, big_n * (big_n - 1) // 2, -big_n * (big_n - 2) // 2, tail],
    ]


def drg_parameters(graph: nx.Graph) -> DrgParameters:
    distances = distance_layers(graph)
    b, c, a = intersection_array(graph, distances)
    start = next(iter(distances))
    valencies = [0] * len(b)
    for j in distances[start].values():
        valencies[j] += 1
    return DrgParameters(
        vertices=graph.number_of_nodes(),
        diameter=len(b) - 1,
        b=b,
        c=c,
        a=a,
        valencies=valencies,
        eigenmatrix=eigenmatrix_from_intersection_array(b, c, a),
    )


def odd_distance_is_complete_bipartite(graph: nx.Graph, distances: Optional[Dict] = None) -> bool:
    """R₁ ∪ R₃ joins every pair of vertices on opposite sides of the bipartition."""
    distances = distances or distance_layers(graph)
    for u, dist_u in distances.items():
        for v, j in dist_u.items():
            if (j % 2 == 1) != (bipartition(u) != bipartition(v)):
                return False
    return True


def distance_graph(graph: nx.Graph, j: int, distances: Optional[Dict] = None) -> nx.Graph:
    """Vertices joined when they lie at distance j in the given graph."""
    distances = distances or distance_layers(graph)
    out = nx.Graph()
    out.add_nodes_from(graph.nodes())
    out.add_edges_from((u, v) for u, dist_u in distances.items() for v, d in dist_u.items() if d == j)
    return out


def distance_three_graph_is_regular(graph: nx.Graph) -> bool:
    """Whether the distance-3 graph of Γ_m is itself distance regular."""
    return nx.is_distance_regular(distance_graph(graph, 3))
