"""Cohesiveness measures and a community-search evaluation harness for
temporal, sentiment-labeled social networks."""

from .decay import DecaySpec, phi
from .dynamics import ExcitationConfig, accumulate_pair, elicited_sentiment, excitation
from .graph import (
    Community,
    Event,
    GraphStats,
    IngestError,
    TemporalMultigraph,
    induce,
    ingest,
    largest_weak_component,
    load_edge_list,
    stats,
    to_simple_directed,
    to_simple_undirected,
)
from .harness import EvalPlan, RunReport, generate_queries, q_hit, run, sweep_decay
from .measures import PsychScores, ced, ei, gid, gip, score_community, sit
from .search import (
    SearchOutcome,
    kl_core_search,
    max_core_search,
    size_bounded_truss_search,
    truss_search,
    validate,
)
from .structural import INF, StructScores, score_structure

__version__ = "0.1.0"
