"""Sentiment excitation dynamics.

An event's excitation is a baseline level plus contributions from earlier
events in the same scope, each signed by the product of the two sentiment
polarities and weighted by the decay kernel, clamped at zero. The elicited
sentiment is the event's own polarity scaled by that excitation.

Summation order is fixed to ascending (t, event_id) everywhere so that
pairwise accumulation is bitwise symmetric and global sentiment negation
flips signs exactly; do not reassociate the floating-point sums here.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import exp
from typing import Sequence

from .decay import EXPONENTIAL, DecaySpec, phi
from .graph import Community, Event


@dataclass(frozen=True)
class ExcitationConfig:
    """Baseline excitation level and the decay kernel applied to history.

    lambda0 = 1 makes an event with no history elicit exactly its own
    sentiment."""

    lambda0: float = 1.0
    decay: DecaySpec = field(default_factory=DecaySpec)

    def __post_init__(self):
        if self.lambda0 <= 0:
            raise ValueError("lambda0 must be positive")


def _check_history(current: Event, history: Sequence[Event]) -> list[Event]:
    key = current.order_key()
    for e in history:
        if e.order_key() >= key:
            raise ValueError(
                f"history event at t={e.t} (id {e.event_id}) does not precede "
                f"current event at t={current.t} (id {current.event_id})"
            )
    return sorted(history, key=Event.order_key)


def excitation(cfg: ExcitationConfig, current: Event, history: Sequence[Event]) -> float:
    """Excitation of `current` given strictly earlier same-scope events:
    max(0, lambda0 + sum senti(e') * senti(current) * phi(current.t - e'.t))."""
    level = cfg.lambda0
    for e in _check_history(current, history):
        level += e.sentiment * current.sentiment * phi(cfg.decay, current.t - e.t)
    return max(level, 0.0)


def elicited_sentiment(cfg: ExcitationConfig, current: Event, history: Sequence[Event]) -> float:
    """senti(current) scaled by the excitation accumulated from `history`."""
    return current.sentiment * excitation(cfg, current, history)


def decayed_elicited_sum(cfg: ExcitationConfig, scope: Sequence[Event], t_cur: int) -> float:
    """Sum of elicited sentiments over `scope`, each weighted by
    phi(t_cur - t), where every event's history is the strictly earlier
    part of the same scope.

    `scope` must be sorted ascending by (t, event_id) and contain only
    events with t <= t_cur. For the exponential kernel the history sums
    are carried forward incrementally (O(m)); the polynomial kernel has
    no such recurrence and is evaluated directly.
    """
    if not scope:
        return 0.0
    if scope[-1].t > t_cur:
        raise ValueError("scope contains events after t_cur")
    lam0 = cfg.lambda0
    total = 0.0
    if cfg.decay.kind == EXPONENTIAL:
        rate = cfg.decay.rate
        carried = 0.0  # sum of senti(e') * exp(-rate * (t_prev - t')) over processed events
        prev_t: int | None = None
        for e in scope:
            if prev_t is not None and e.t != prev_t:
                carried *= exp(-rate * (e.t - prev_t))
            level = lam0 + e.sentiment * carried
            if level < 0.0:
                level = 0.0
            total += e.sentiment * level * phi(cfg.decay, t_cur - e.t)
            carried += float(e.sentiment)
            prev_t = e.t
    else:
        for k, e in enumerate(scope):
            level = lam0
            for prior in scope[:k]:
                level += prior.sentiment * e.sentiment * phi(cfg.decay, e.t - prior.t)
            if level < 0.0:
                level = 0.0
            total += e.sentiment * level * phi(cfg.decay, t_cur - e.t)
    return total


def pair_events(community: Community, i: int, j: int, t_cur: int) -> list[Event]:
    """Interaction events between i and j (either direction) up to t_cur,
    in (t, event_id) order. Identical regardless of argument order."""
    lo = min(i, j)
    other = max(i, j)
    return [
        e
        for e in community.events_touching(lo)
        if not e.is_self_loop and e.other(lo) == other and e.t <= t_cur
    ]


def accumulate_pair(
    cfg: ExcitationConfig, community: Community, i: int, j: int, t_cur: int
) -> float:
    """Accumulated decayed elicited sentiment over the pair's own event
    history; symmetric in (i, j) bitwise."""
    if i == j:
        raise ValueError("pair accumulation requires two distinct users")
    for u in (i, j):
        if u not in community.members:
            raise ValueError(f"user {u} is not a community member")
    return decayed_elicited_sum(cfg, pair_events(community, i, j, t_cur), t_cur)
