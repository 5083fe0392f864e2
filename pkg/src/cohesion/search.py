"""Reference community searchers over simple graph views.

One member each of the core and truss structural families, a directed
(k,l)-core peeler, and a greedy size-bounded variant. Every searcher
returns either a node set that is connected and contains the query, or a
not-found outcome with a reason. `validate` re-checks the contract and
downgrades violations to not-found instead of propagating them.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass

from .graph import SimpleDigraph, SimpleGraph

ALGORITHMS = ("max-core", "kl-core", "truss", "st-truss")


@dataclass(frozen=True)
class SearchOutcome:
    members: frozenset[int] | None
    reason: str | None = None

    @property
    def found(self) -> bool:
        return self.members is not None


def not_found(reason: str) -> SearchOutcome:
    return SearchOutcome(None, reason)


def _require_node(view: SimpleGraph | SimpleDigraph, q: int) -> None:
    nodes = view.adj if isinstance(view, SimpleGraph) else view.succ
    if q not in nodes:
        raise ValueError(f"query node {q} is not in the graph")


def _component(adj: dict[int, set[int]], q: int, allowed: set[int]) -> frozenset[int]:
    seen = {q}
    queue = deque([q])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if v in allowed and v not in seen:
                seen.add(v)
                queue.append(v)
    return frozenset(seen)


def core_numbers(sg: SimpleGraph) -> dict[int, int]:
    """Core number of every node via min-degree peeling (lazy heap)."""
    degree = {u: sg.degree(u) for u in sg.nodes}
    heap = [(d, u) for u, d in degree.items()]
    heapq.heapify(heap)
    core: dict[int, int] = {}
    removed: set[int] = set()
    level = 0
    while heap:
        d, u = heapq.heappop(heap)
        if u in removed or d != degree[u]:
            continue
        level = max(level, d)
        core[u] = level
        removed.add(u)
        for v in sg.adj[u]:
            if v not in removed:
                degree[v] -= 1
                heapq.heappush(heap, (degree[v], v))
    return core


def max_core_search(sg: SimpleGraph, q: int) -> SearchOutcome:
    """Connected component of q inside the deepest core that still holds q.
    An isolated query yields a singleton outcome annotated as such."""
    _require_node(sg, q)
    cores = core_numbers(sg)
    k = cores[q]
    if k == 0:
        return SearchOutcome(frozenset({q}), "isolated")
    allowed = {u for u, c in cores.items() if c >= k}
    return SearchOutcome(_component(sg.adj, q, allowed))


def kl_core_search(dg: SimpleDigraph, q: int, k: int, l: int) -> SearchOutcome:
    """Peel nodes with in-degree < k or out-degree < l to a fixpoint and
    return the weakly-connected component of q among survivors."""
    _require_node(dg, q)
    if k < 0 or l < 0:
        raise ValueError("k and l must be non-negative")
    indeg = {u: len(dg.pred[u]) for u in dg.nodes}
    outdeg = {u: len(dg.succ[u]) for u in dg.nodes}
    removed: set[int] = set()
    queue = deque(u for u in dg.nodes if indeg[u] < k or outdeg[u] < l)
    in_queue = set(queue)
    while queue:
        u = queue.popleft()
        in_queue.discard(u)
        if u in removed or (indeg[u] >= k and outdeg[u] >= l):
            continue
        removed.add(u)
        for v in dg.succ[u]:
            if v not in removed:
                indeg[v] -= 1
                if indeg[v] < k and v not in in_queue:
                    queue.append(v)
                    in_queue.add(v)
        for v in dg.pred[u]:
            if v not in removed:
                outdeg[v] -= 1
                if outdeg[v] < l and v not in in_queue:
                    queue.append(v)
                    in_queue.add(v)
    if q in removed:
        return not_found("query peeled")
    survivors = {u for u in dg.nodes if u not in removed}
    weak_adj = {
        u: (dg.succ[u] | dg.pred[u]) & survivors for u in survivors
    }
    return SearchOutcome(_component(weak_adj, q, survivors))


def truss_peel(sg: SimpleGraph, k: int) -> dict[int, set[int]]:
    """Adjacency of the edges surviving support < k-2 peeling."""
    adj = {u: set(nb) for u, nb in sg.adj.items()}
    support: dict[frozenset[int], int] = {}
    for u, v in sg.edges():
        support[frozenset((u, v))] = len(sg.adj[u] & sg.adj[v])
    threshold = k - 2
    queue = deque(e for e, s in support.items() if s < threshold)
    dead = set(queue)
    while queue:
        edge = queue.popleft()
        u, v = sorted(edge)
        if v not in adj[u]:
            continue
        adj[u].discard(v)
        adj[v].discard(u)
        for w in adj[u] & adj[v]:
            for other in (frozenset((u, w)), frozenset((v, w))):
                support[other] -= 1
                if support[other] < threshold and other not in dead:
                    dead.add(other)
                    queue.append(other)
    return adj


def truss_search(sg: SimpleGraph, q: int, k: int) -> SearchOutcome:
    """Nodes reachable from q over edges that survive truss peeling at
    level k."""
    _require_node(sg, q)
    if k < 2:
        raise ValueError("truss level k must be at least 2")
    adj = truss_peel(sg, k)
    if not adj[q]:
        return not_found("no surviving edge at query")
    alive = {u for u, nb in adj.items() if nb}
    return SearchOutcome(_component(adj, q, alive))


def _min_support(sg: SimpleGraph, nodes: set[int]) -> int:
    best: int | None = None
    for u in nodes:
        for v in sg.adj[u] & nodes:
            if u < v:
                s = len(sg.adj[u] & sg.adj[v] & nodes)
                if best is None or s < best:
                    best = s
    return -1 if best is None else best


def size_bounded_truss_search(sg: SimpleGraph, q: int, l: int, h: int) -> SearchOutcome:
    """Greedy heuristic: grow from q one neighbor at a time, keeping the
    induced minimum edge support as high as possible, until the size bound
    h is reached or no neighbors remain. Ties break toward the smallest
    node id. Not the exact (exponential) size-bounded search."""
    _require_node(sg, q)
    if not (1 <= l <= h):
        raise ValueError(f"size bounds must satisfy 1 <= l <= h, got [{l}, {h}]")
    chosen = {q}
    while len(chosen) < h:
        candidates = sorted(
            {v for u in chosen for v in sg.adj[u]} - chosen
        )
        if not candidates:
            break
        best = max(candidates, key=lambda c: (_min_support(sg, chosen | {c}), -c))
        chosen.add(best)
    if len(chosen) < l:
        return not_found("component too small")
    return SearchOutcome(frozenset(chosen))


def validate(
    outcome: SearchOutcome, view: SimpleGraph | SimpleDigraph, q: int
) -> SearchOutcome:
    """Downgrade contract violations (query missing, disconnected node set)
    to not-found outcomes rather than trusting the searcher."""
    if not outcome.found:
        return outcome
    members = outcome.members
    if q not in members:
        return not_found("query absent")
    if isinstance(view, SimpleGraph):
        adj = view.adj
    else:
        adj = {u: view.succ[u] | view.pred[u] for u in members}
    reachable = _component({u: adj[u] & members for u in members}, q, set(members))
    if reachable != members:
        return not_found("invalid result")
    return outcome
