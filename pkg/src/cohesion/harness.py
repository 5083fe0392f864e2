"""Evaluation pipeline: seeded query generation, parameter grids, view
transformation, search, community mapping, measurement and aggregation.

A plan plus a dataset fully determines the report, byte for byte: query
sampling is seeded, searches are deterministic, and all means are summed
in fixed (ascending) order. Search results depend only on the graph
views, so decay-rate sweeps reuse them and recompute the sentiment
measures only.
"""

from __future__ import annotations

import json
import math
import time
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Sequence

from . import measures
from .decay import DecaySpec
from .dynamics import ExcitationConfig
from .graph import (
    TemporalMultigraph,
    induce,
    largest_weak_component,
    load_edge_list,
    to_simple_directed,
    to_simple_undirected,
)
from .search import (
    ALGORITHMS,
    SearchOutcome,
    _component,
    core_numbers,
    kl_core_search,
    not_found,
    size_bounded_truss_search,
    truss_peel,
    validate,
)
from .structural import INF, StructScores, score_structure

SCORE_FIELDS = ("d", "size", "deg_min", "core", "truss", "ei", "sit", "ced", "gip", "gid")


@dataclass(frozen=True)
class EvalPlan:
    dataset: str
    algorithm: str
    param_grid: tuple[dict, ...] = ({},)
    n_queries: int = 100
    rng_seed: int = 0
    decay: DecaySpec = field(default_factory=DecaySpec)
    lambda0: float = 1.0
    t_cur: int | None = None
    hit_mode: str = "any"  # a query hits if any (default) or all combos succeed
    largest_component_only: bool = True
    window: tuple[int, float] | None = None
    time_budget_s: float = 600.0
    n_workers: int = 1

    def __post_init__(self):
        if self.algorithm not in ALGORITHMS:
            raise ValueError(f"unknown algorithm {self.algorithm!r}; known: {ALGORITHMS}")
        if self.n_queries < 1:
            raise ValueError("n_queries must be >= 1")
        if not self.param_grid:
            raise ValueError("parameter grid must be non-empty")
        if self.hit_mode not in ("any", "all"):
            raise ValueError("hit_mode must be 'any' or 'all'")

    def excitation_config(self) -> ExcitationConfig:
        return ExcitationConfig(lambda0=self.lambda0, decay=self.decay)

    def to_dict(self) -> dict:
        return {
            "dataset": self.dataset,
            "algorithm": self.algorithm,
            "param_grid": list(self.param_grid),
            "n_queries": self.n_queries,
            "rng_seed": self.rng_seed,
            "decay": {"kind": self.decay.kind, "rate": self.decay.rate},
            "lambda0": self.lambda0,
            "t_cur": self.t_cur,
            "hit_mode": self.hit_mode,
            "largest_component_only": self.largest_component_only,
            "window": list(self.window) if self.window else None,
            "time_budget_s": self.time_budget_s,
            "n_workers": self.n_workers,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "EvalPlan":
        known = {
            "dataset", "algorithm", "param_grid", "n_queries", "rng_seed",
            "decay", "lambda0", "t_cur", "hit_mode", "largest_component_only",
            "window", "time_budget_s", "n_workers",
        }
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown plan keys: {sorted(unknown)}")
        if "dataset" not in data or "algorithm" not in data:
            raise ValueError("plan requires 'dataset' and 'algorithm'")
        kwargs = dict(data)
        decay = kwargs.pop("decay", None)
        if decay is not None:
            kwargs["decay"] = DecaySpec(decay.get("kind", "exponential"), decay.get("rate", 0.0001))
        if kwargs.get("param_grid") is not None:
            kwargs["param_grid"] = tuple(dict(p) for p in kwargs["param_grid"])
        if kwargs.get("window") is not None:
            t0, tau = kwargs["window"]
            kwargs["window"] = (int(t0), float(tau))
        return cls(**kwargs)


def load_plan(path: str) -> EvalPlan:
    with open(path, encoding="utf-8") as fh:
        return EvalPlan.from_dict(json.load(fh))


@dataclass
class ComboResult:
    params: dict
    found: bool
    reason: str | None
    n_members: int | None = None
    n_events: int | None = None
    struct: StructScores | None = None
    psych: measures.PsychScores | None = None

    def score(self, name: str) -> float | None:
        if not self.found:
            return None
        if name == "d":
            return self.struct.diameter
        if name == "size":
            return float(self.struct.size)
        if name == "deg_min":
            return float(self.struct.deg_min)
        if name == "core":
            return float(self.struct.core)
        if name == "truss":
            return float(self.struct.truss)
        return getattr(self.psych, name)


@dataclass
class QueryRecord:
    query: int
    combos: list[ComboResult]
    averaged: dict[str, float | None]
    hit: bool


@dataclass
class RunReport:
    plan: dict
    metadata: dict
    queries_with_replacement: bool
    records: list[QueryRecord]
    aggregates: dict[str, float | None]
    q_hit: float


def generate_queries(
    g: TemporalMultigraph, n: int, seed: int
) -> tuple[list[int], bool]:
    """Sample n query nodes from the top half of users by multigraph
    degree (ceiling split, boundary ties all admitted). Falls back to
    sampling with replacement, flagged, when the pool is too small."""
    if g.n_users == 0:
        raise ValueError("cannot generate queries for an empty graph")
    degrees = {u: g.degree(u) for u in g.users}
    ranked = sorted(degrees.values(), reverse=True)
    threshold = ranked[math.ceil(len(ranked) / 2) - 1]
    pool = [u for u in g.users if degrees[u] >= threshold]
    rng = random.Random(seed)
    if len(pool) >= n:
        return rng.sample(pool, n), False
    return [rng.choice(pool) for _ in range(n)], True


def _make_searcher(
    plan: EvalPlan, und, dirg
) -> Callable[[int, dict], SearchOutcome]:
    """Bind the plan's algorithm to the right view, caching the
    query-independent peeling work across queries."""
    algorithm = plan.algorithm
    if algorithm == "max-core":
        cores = core_numbers(und)

        def core_one(q: int, params: dict) -> SearchOutcome:
            k = cores[q]
            if k == 0:
                return SearchOutcome(frozenset({q}), "isolated")
            allowed = {u for u, c in cores.items() if c >= k}
            return validate(_component_outcome(und.adj, q, allowed), und, q)

        return core_one

    if algorithm == "kl-core":
        return lambda q, params: validate(
            kl_core_search(dirg, q, int(params["k"]), int(params["l"])), dirg, q
        )

    if algorithm == "truss":
        peeled: dict[int, dict[int, set[int]]] = {}

        def truss_one(q: int, params: dict) -> SearchOutcome:
            k = int(params["k"])
            if k < 2:
                raise ValueError("truss level k must be at least 2")
            if k not in peeled:
                peeled[k] = truss_peel(und, k)
            adj = peeled[k]
            if not adj[q]:
                return not_found("no surviving edge at query")
            alive = {u for u, nb in adj.items() if nb}
            return validate(_component_outcome(adj, q, alive), und, q)

        return truss_one

    # st-truss: greedy growth is query-local, nothing to cache
    return lambda q, params: validate(
        size_bounded_truss_search(und, q, int(params["l"]), int(params["h"])), und, q
    )


def _component_outcome(adj: dict[int, set[int]], q: int, allowed: set[int]) -> SearchOutcome:
    return SearchOutcome(_component(adj, q, allowed))


def _average(values: list[float | None]) -> float | None:
    present = [v for v in values if v is not None]
    if not present:
        return None
    if any(v == INF for v in present):
        return INF
    return sum(present) / len(present)


def _search_phase(plan: EvalPlan, g: TemporalMultigraph):
    und = to_simple_undirected(g)
    dirg = to_simple_directed(g)
    queries, with_replacement = generate_queries(g, plan.n_queries, plan.rng_seed)
    searcher = _make_searcher(plan, und, dirg)
    deadline = time.monotonic() + plan.time_budget_s

    def search_query(q: int) -> list[tuple[dict, SearchOutcome]]:
        out = []
        for params in plan.param_grid:
            if time.monotonic() > deadline:
                out.append((params, not_found("time budget exceeded")))
                continue
            out.append((params, searcher(q, params)))
        return out

    if plan.n_workers > 1:
        with ThreadPoolExecutor(max_workers=plan.n_workers) as pool:
            outcomes = list(pool.map(search_query, queries))
    else:
        outcomes = [search_query(q) for q in queries]
    return queries, with_replacement, outcomes


def _measure_phase(
    plan: EvalPlan,
    g: TemporalMultigraph,
    queries: list[int],
    with_replacement: bool,
    outcomes,
    struct_cache: dict | None = None,
) -> RunReport:
    cfg = plan.excitation_config()
    t_cur = plan.t_cur if plan.t_cur is not None else (g.t_max or 0)
    if struct_cache is None:
        struct_cache = {}
    psych_cache: dict[frozenset[int], measures.PsychScores] = {}
    community_cache: dict[frozenset[int], object] = {}

    records: list[QueryRecord] = []
    for q, per_combo in zip(queries, outcomes):
        combos: list[ComboResult] = []
        for params, outcome in per_combo:
            if not outcome.found:
                combos.append(ComboResult(params, False, outcome.reason))
                continue
            members = outcome.members
            if members not in community_cache:
                community_cache[members] = induce(g, members)
            community = community_cache[members]
            if members not in struct_cache:
                struct_cache[members] = score_structure(community)
            if members not in psych_cache:
                psych_cache[members] = measures.score_community(
                    community, t_cur, cfg, plan.window
                )
            combos.append(
                ComboResult(
                    params,
                    True,
                    outcome.reason,
                    n_members=community.n_members,
                    n_events=community.n_events,
                    struct=struct_cache[members],
                    psych=psych_cache[members],
                )
            )
        averaged = {
            name: _average([c.score(name) for c in combos]) for name in SCORE_FIELDS
        }
        successes = [c for c in combos if c.found]
        hit = bool(successes) if plan.hit_mode == "any" else len(successes) == len(combos)
        records.append(QueryRecord(q, combos, averaged, hit))

    aggregates = {
        name: _average([r.averaged[name] for r in records if r.hit])
        for name in SCORE_FIELDS
    }
    rate = q_hit(records, plan.n_queries)
    metadata = {
        "t_cur": t_cur,
        "time_unit": "seconds",
        "density_convention": "simple undirected view, 2|E|/(n(n-1))",
        "self_loop_degree": 1,
        "gip_empty_community": 0.0,
        "st_truss_heuristic": plan.algorithm == "st-truss",
        "queries_with_replacement": with_replacement,
    }
    return RunReport(
        plan=plan.to_dict(),
        metadata=metadata,
        queries_with_replacement=with_replacement,
        records=records,
        aggregates=aggregates,
        q_hit=rate,
    )


def run(plan: EvalPlan, g: TemporalMultigraph | None = None) -> RunReport:
    """Execute the full pipeline for one plan."""
    if g is None:
        g = load_edge_list(plan.dataset)
    if plan.largest_component_only:
        g = largest_weak_component(g)
    queries, with_replacement, outcomes = _search_phase(plan, g)
    return _measure_phase(plan, g, queries, with_replacement, outcomes)


def q_hit(records: Sequence[QueryRecord], n_queries: int) -> float:
    """Percentage of queries with at least one successful combination
    (or all, under hit_mode='all', already folded into record.hit)."""
    return 100.0 * sum(1 for r in records if r.hit) / n_queries


def sweep_decay(
    plan: EvalPlan, rates: Sequence[float], kind: str | None = None
) -> list[RunReport]:
    """One report per decay rate, sharing queries and search results;
    only the sentiment measures are recomputed."""
    if not rates:
        raise ValueError("rates must be non-empty")
    g = load_edge_list(plan.dataset)
    if plan.largest_component_only:
        g = largest_weak_component(g)
    queries, with_replacement, outcomes = _search_phase(plan, g)
    struct_cache: dict = {}
    reports = []
    for rate in rates:
        spec = DecaySpec(kind or plan.decay.kind, rate)
        variant = EvalPlan.from_dict({**plan.to_dict(), "decay": {"kind": spec.kind, "rate": spec.rate}})
        reports.append(
            _measure_phase(variant, g, queries, with_replacement, outcomes, struct_cache)
        )
    return reports
