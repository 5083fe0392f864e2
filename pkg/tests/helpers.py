from __future__ import annotations

import random

from cohesion.graph import Event, TemporalMultigraph, induce, ingest


def build_graph(records) -> TemporalMultigraph:
    """ingest() wrapper; tests use contiguous 0..n-1 ids so the dense
    remapping is the identity."""
    g = ingest(records)
    assert g.original_ids == tuple(range(g.n_users))
    return g


def community_of(g, members):
    return induce(g, members)


def random_events(rng: random.Random, n_users: int, m: int, t_span: int = 1000,
                  self_loop_p: float = 0.1) -> list[tuple[int, int, int, int]]:
    records = []
    # a spanning cycle keeps every user present so ids stay dense
    for u in range(n_users):
        records.append((u, (u + 1) % n_users, rng.randrange(t_span), rng.choice((-1, 0, 1))))
    for _ in range(max(0, m - n_users)):
        src = rng.randrange(n_users)
        if rng.random() < self_loop_p:
            dst = src
        else:
            dst = rng.randrange(n_users)
            while dst == src:
                dst = rng.randrange(n_users)
        records.append((src, dst, rng.randrange(t_span), rng.choice((-1, 0, 1))))
    return records


def random_scope(rng: random.Random, m: int, t_span: int = 1000) -> list[Event]:
    """A strictly (t, event_id)-ordered event list usable as a history scope."""
    times = sorted(rng.randrange(t_span) for _ in range(m))
    return [
        Event(event_id=i, src=0, dst=1, t=t, sentiment=rng.choice((-1, 0, 1)))
        for i, t in enumerate(times)
    ]
