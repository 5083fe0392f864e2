"""Temporal directed multigraph storage and views.

Users are densely renumbered integers; events are time-stamped, directed,
sentiment-labeled and may be parallel or self-loops. Graphs are immutable
after construction, so every view and measure can read them concurrently.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

VALID_SENTIMENTS = (-1, 0, 1)


class IngestError(ValueError):
    """Raised when an edge record cannot be turned into an event."""


@dataclass(frozen=True)
class Event:
    """One activity: a directed interaction, or a self-loop for an
    individual post (src == dst)."""

    event_id: int
    src: int
    dst: int
    t: int
    sentiment: int

    @property
    def is_self_loop(self) -> bool:
        return self.src == self.dst

    def other(self, user: int) -> int:
        """The counterpart of `user` in this event."""
        return self.dst if self.src == user else self.src

    def order_key(self) -> tuple[int, int]:
        return (self.t, self.event_id)


class TemporalMultigraph:
    """Immutable directed temporal multigraph.

    `users` are dense ids 0..n-1; `original_ids[u]` recovers the external
    id seen at ingestion. `events` are sorted by (t, event_id), where
    event_id preserves input order among equal timestamps.
    """

    def __init__(self, events: Sequence[Event], original_ids: Sequence[int]):
        self.events: tuple[Event, ...] = tuple(events)
        self.original_ids: tuple[int, ...] = tuple(original_ids)
        self.users: range = range(len(original_ids))
        self._by_user: dict[int, list[Event]] = {u: [] for u in self.users}
        for e in self.events:
            self._by_user[e.src].append(e)
            if e.dst != e.src:
                self._by_user[e.dst].append(e)

    @property
    def n_users(self) -> int:
        return len(self.original_ids)

    @property
    def n_events(self) -> int:
        return len(self.events)

    @property
    def t_max(self) -> int | None:
        """Latest timestamp, or None for an empty graph."""
        return self.events[-1].t if self.events else None

    def events_touching(self, user: int) -> list[Event]:
        """All events with `user` as an endpoint (self-loops included once),
        in (t, event_id) order."""
        return self._by_user[user]

    def degree(self, user: int, self_loop_weight: int = 1) -> int:
        """Event-incidence count: each non-self-loop event contributes 1 to
        each endpoint; a self-loop contributes `self_loop_weight` (default 1,
        the activity-count convention)."""
        d = 0
        for e in self._by_user[user]:
            d += self_loop_weight if e.is_self_loop else 1
        return d


def ingest(records: Iterable[tuple], labels: Sequence[object] | None = None) -> TemporalMultigraph:
    """Build a graph from (src, dst, timestamp, sentiment) records.

    External ids are remapped to dense ids (ascending original order);
    events are stably sorted by timestamp so equal-t events keep input
    order. Users appear only via their events, so isolated users cannot
    occur. `labels`, when given, names each record in error messages
    (the file loaders pass line numbers).
    """
    raw: list[tuple[int, int, int, int]] = []
    for idx, rec in enumerate(records):
        label = labels[idx] if labels is not None else f"record {idx + 1}"
        try:
            src, dst, t, sentiment = rec
        except (TypeError, ValueError):
            raise IngestError(f"{label}: expected (src, dst, timestamp, sentiment), got {rec!r}")
        try:
            src, dst, t, sentiment = int(src), int(dst), int(float(t)), int(sentiment)
        except (TypeError, ValueError):
            raise IngestError(f"{label}: non-numeric field in {rec!r}")
        if src < 0 or dst < 0:
            raise IngestError(f"{label}: negative user id in {rec!r}")
        if sentiment not in VALID_SENTIMENTS:
            raise IngestError(f"{label}: sentiment {sentiment} not in {{-1, 0, 1}}")
        raw.append((src, dst, t, sentiment))

    ids = sorted({u for s, d, _, _ in raw for u in (s, d)})
    remap = {orig: dense for dense, orig in enumerate(ids)}
    raw.sort(key=lambda r: r[2])  # stable: equal-t records keep input order
    events = [
        Event(event_id=i, src=remap[s], dst=remap[d], t=t, sentiment=sent)
        for i, (s, d, t, sent) in enumerate(raw)
    ]
    return TemporalMultigraph(events, ids)


def load_edge_list(path: str) -> TemporalMultigraph:
    """Load a CSV (header src,dst,timestamp,sentiment; # comments allowed)
    or a JSON-lines file with the same keys. Errors name the bad line."""
    records: list[tuple] = []
    labels: list[str] = []
    if str(path).endswith((".jsonl", ".ndjson", ".json")):
        with open(path, encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, start=1):
                line = line.strip()
                if not line:
                    continue
                try:
                    obj = json.loads(line)
                    rec = (obj["src"], obj["dst"], obj["timestamp"], obj["sentiment"])
                except (json.JSONDecodeError, KeyError, TypeError) as exc:
                    raise IngestError(f"{path}:{lineno}: {exc}")
                records.append(rec)
                labels.append(f"{path}:{lineno}")
    else:
        with open(path, encoding="utf-8", newline="") as fh:
            header: list[str] | None = None
            for lineno, row in enumerate(csv.reader(fh), start=1):
                if not row or row[0].lstrip().startswith("#"):
                    continue
                if header is None:
                    header = [c.strip() for c in row]
                    expected = ["src", "dst", "timestamp", "sentiment"]
                    if header != expected:
                        raise IngestError(f"{path}:{lineno}: header must be {','.join(expected)}")
                    continue
                if len(row) != 4:
                    raise IngestError(f"{path}:{lineno}: expected 4 fields, got {len(row)}")
                records.append(tuple(row))
                labels.append(f"{path}:{lineno}")
            if header is None:
                raise IngestError(f"{path}: missing header line")
    return ingest(records, labels=labels)


@dataclass
class Community:
    """A member set plus every parent event among the members (never a
    subset: the induced-subgraph rule)."""

    members: frozenset[int]
    events: tuple[Event, ...]
    parent: TemporalMultigraph

    _by_user: dict[int, list[Event]] = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        for u in sorted(self.members):
            self._by_user[u] = []
        for e in self.events:
            self._by_user[e.src].append(e)
            if e.dst != e.src:
                self._by_user[e.dst].append(e)

    @property
    def n_members(self) -> int:
        return len(self.members)

    @property
    def n_events(self) -> int:
        return len(self.events)

    def events_touching(self, user: int) -> list[Event]:
        return self._by_user[user]

    def degree(self, user: int, self_loop_weight: int = 1) -> int:
        d = 0
        for e in self._by_user[user]:
            d += self_loop_weight if e.is_self_loop else 1
        return d


def induce(g: TemporalMultigraph, members: Iterable[int]) -> Community:
    """Community induced by `members`: all parent events with both endpoints
    inside, self-loops of members included."""
    member_set = frozenset(members)
    unknown = [u for u in member_set if u not in g.users]
    if unknown:
        raise ValueError(f"unknown user ids: {sorted(unknown)}")
    events = tuple(e for e in g.events if e.src in member_set and e.dst in member_set)
    return Community(member_set, events, g)


def largest_weak_component(g: TemporalMultigraph) -> TemporalMultigraph:
    """Subgraph induced by the largest weakly-connected user set, rebuilt
    with dense ids. Size ties break toward the component holding the
    smallest user id. Empty graph passes through."""
    if g.n_users == 0:
        return g
    parent = list(g.users)

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in g.events:
        a, b = find(e.src), find(e.dst)
        if a != b:
            parent[max(a, b)] = min(a, b)
    comps: dict[int, list[int]] = {}
    for u in g.users:
        comps.setdefault(find(u), []).append(u)
    best = max(comps.values(), key=lambda c: (len(c), -min(c)))
    keep = set(best)
    records = [
        (g.original_ids[e.src], g.original_ids[e.dst], e.t, e.sentiment)
        for e in g.events
        if e.src in keep and e.dst in keep
    ]
    return ingest(records)


class SimpleGraph:
    """Undirected simple view: parallel edges collapsed, self-loops dropped,
    both directions merged."""

    def __init__(self, nodes: Iterable[int], adj: dict[int, set[int]]):
        self.nodes: tuple[int, ...] = tuple(sorted(nodes))
        self.adj = adj

    @property
    def n_edges(self) -> int:
        return sum(len(nb) for nb in self.adj.values()) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in self.nodes:
            for v in self.adj[u]:
                if u < v:
                    yield (u, v)

    def degree(self, u: int) -> int:
        return len(self.adj[u])


class SimpleDigraph:
    """Directed simple view: parallel edges collapsed, self-loops dropped."""

    def __init__(self, nodes: Iterable[int], succ: dict[int, set[int]], pred: dict[int, set[int]]):
        self.nodes: tuple[int, ...] = tuple(sorted(nodes))
        self.succ = succ
        self.pred = pred

    @property
    def n_edges(self) -> int:
        return sum(len(s) for s in self.succ.values())


def to_simple_undirected(g: TemporalMultigraph | Community) -> SimpleGraph:
    nodes = _node_set(g)
    adj: dict[int, set[int]] = {u: set() for u in nodes}
    for e in _iter_events(g):
        if e.src != e.dst:
            adj[e.src].add(e.dst)
            adj[e.dst].add(e.src)
    return SimpleGraph(nodes, adj)


def to_simple_directed(g: TemporalMultigraph | Community) -> SimpleDigraph:
    nodes = _node_set(g)
    succ: dict[int, set[int]] = {u: set() for u in nodes}
    pred: dict[int, set[int]] = {u: set() for u in nodes}
    for e in _iter_events(g):
        if e.src != e.dst:
            succ[e.src].add(e.dst)
            pred[e.dst].add(e.src)
    return SimpleDigraph(nodes, succ, pred)


def _node_set(g: TemporalMultigraph | Community) -> set[int]:
    if isinstance(g, Community):
        return set(g.members)
    return set(g.users)


def _iter_events(g: TemporalMultigraph | Community) -> Iterable[Event]:
    return g.events


@dataclass(frozen=True)
class GraphStats:
    n_users: int
    n_events: int
    n_timestamps: int
    density: float
    deg_avg: float


def stats(g: TemporalMultigraph, self_loop_weight: int = 1) -> GraphStats:
    """Dataset statistics. deg_avg counts every event incidence (parallel
    edges and self-loops included; a self-loop adds `self_loop_weight`).
    Density is taken on the simple undirected view: 2|E| / (n(n-1));
    it is 0 when fewer than two users exist."""
    n = g.n_users
    incidences = sum(
        2 if e.src != e.dst else self_loop_weight for e in g.events
    )
    deg_avg = incidences / n if n else 0.0
    if n < 2:
        density = 0.0
    else:
        density = 2.0 * to_simple_undirected(g).n_edges / (n * (n - 1))
    n_timestamps = len({e.t for e in g.events})
    return GraphStats(n, g.n_events, n_timestamps, density, deg_avg)
