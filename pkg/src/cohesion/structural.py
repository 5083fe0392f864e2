"""Classical structural cohesiveness metrics for a community.

Diameter, core level and truss level are computed on the community's
simple undirected view; the minimum degree keeps multigraph semantics
(parallel edges and self-loops counted). The community is labeled with
the guarantee the whole subgraph satisfies (its minimum degree / minimum
edge support), not with an internal decomposition.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from .graph import Community, SimpleGraph, to_simple_undirected

INF = float("inf")


@dataclass(frozen=True)
class StructScores:
    diameter: float  # INF when the simple view is disconnected
    size: int
    deg_min: int
    core: int
    truss: int


def diameter(community: Community) -> float:
    """Longest shortest path on the simple undirected view; INF when
    disconnected, 0 for a single node."""
    sg = to_simple_undirected(community)
    return simple_diameter(sg)


def simple_diameter(sg: SimpleGraph) -> float:
    n = len(sg.nodes)
    if n == 0:
        raise ValueError("diameter of an empty community is undefined")
    if n == 1:
        return 0.0
    index = {u: k for k, u in enumerate(sg.nodes)}
    rows: list[int] = []
    cols: list[int] = []
    for u, v in sg.edges():
        rows.append(index[u])
        cols.append(index[v])
    if not rows:
        return INF
    data = np.ones(len(rows), dtype=np.int8)
    mat = csr_matrix((data, (rows, cols)), shape=(n, n))
    dist = shortest_path(mat, method="auto", directed=False, unweighted=True)
    longest = dist.max()
    return INF if np.isinf(longest) else float(longest)


def min_degree_multigraph(community: Community, self_loop_weight: int = 1) -> int:
    """Minimum event-incidence count over members."""
    if not community.members:
        raise ValueError("minimum degree of an empty community is undefined")
    return min(community.degree(u, self_loop_weight) for u in community.members)


def core_number(community: Community) -> int:
    """Largest k such that the whole community is a k-core: the minimum
    degree of its simple undirected view. 0 when edgeless."""
    sg = to_simple_undirected(community)
    if not sg.nodes:
        raise ValueError("core level of an empty community is undefined")
    return min(sg.degree(u) for u in sg.nodes)


def truss_number(community: Community) -> int:
    """Largest k such that every simple edge sits in at least k-2
    triangles: 2 plus the minimum edge support. Edgeless communities are
    a (vacuous) 2-truss by convention."""
    sg = to_simple_undirected(community)
    if not sg.nodes:
        raise ValueError("truss level of an empty community is undefined")
    min_support: int | None = None
    for u, v in sg.edges():
        support = len(sg.adj[u] & sg.adj[v])
        if min_support is None or support < min_support:
            min_support = support
    return 2 if min_support is None else min_support + 2


def score_structure(community: Community, self_loop_weight: int = 1) -> StructScores:
    return StructScores(
        diameter=diameter(community),
        size=community.n_members,
        deg_min=min_degree_multigraph(community, self_loop_weight),
        core=core_number(community),
        truss=truss_number(community),
    )
