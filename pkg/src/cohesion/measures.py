"""The five psychology-informed cohesiveness measures over a community.

Per-user enjoyment (ei), mutual-interaction tendency (sit) and the
inside-vs-outside enjoyment difference (ced) are averaged over all
members, inactive ones contributing zero. Interaction preference (gip)
and interaction density (gid) are group-level counts.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dynamics import ExcitationConfig, accumulate_pair, decayed_elicited_sum
from .graph import Community


@dataclass(frozen=True)
class PsychScores:
    ei: float
    sit: float
    ced: float
    gip: float
    gid: float | None  # None marks the undefined singleton-community case
    per_user_ei: dict[int, float]
    per_user_sit: dict[int, float]
    per_user_ced: dict[int, float]
    t_cur: int
    lambda0: float
    decay_kind: str
    decay_rate: float
    windowed: bool


def _require_member(community: Community, i: int) -> None:
    if i not in community.members:
        raise ValueError(f"user {i} is not a community member")


def _interaction_scope(community: Community, i: int, t_cur: int):
    return [
        e for e in community.events_touching(i) if not e.is_self_loop and e.t <= t_cur
    ]


def ei_user(community: Community, i: int, t_cur: int, cfg: ExcitationConfig) -> float:
    """Decayed sum of elicited sentiments over i's in-community interactions,
    history scoped to those same interactions. Self-loops never count."""
    _require_member(community, i)
    return decayed_elicited_sum(cfg, _interaction_scope(community, i, t_cur), t_cur)


def mutual_partners(community: Community, i: int, t_cur: int) -> list[int]:
    """Members with at least one event in each direction with i by t_cur,
    ascending."""
    _require_member(community, i)
    outgoing: set[int] = set()
    incoming: set[int] = set()
    for e in _interaction_scope(community, i, t_cur):
        if e.src == i:
            outgoing.add(e.dst)
        if e.dst == i:
            incoming.add(e.src)
    return sorted(outgoing & incoming)


def sit_user(community: Community, i: int, t_cur: int, cfg: ExcitationConfig) -> float:
    """Sum of pairwise accumulated sentiment over i's mutual partners."""
    total = 0.0
    for j in mutual_partners(community, i, t_cur):
        total += accumulate_pair(cfg, community, i, j, t_cur)
    return total


def ced_user(community: Community, i: int, t_cur: int, cfg: ExcitationConfig) -> float:
    """Inside-community enjoyment minus the same sum over i's interactions
    with non-members, each side's history scoped to its own event set."""
    _require_member(community, i)
    inside = ei_user(community, i, t_cur, cfg)
    outside_scope = [
        e
        for e in community.parent.events_touching(i)
        if not e.is_self_loop and e.other(i) not in community.members and e.t <= t_cur
    ]
    return inside - decayed_elicited_sum(cfg, outside_scope, t_cur)


def gip(community: Community, t_cur: int) -> float:
    """Fraction of community activity (by t_cur) that is interaction rather
    than self-posting; 0 for an event-empty community."""
    n_all = 0
    n_inter = 0
    for e in community.events:
        if e.t <= t_cur:
            n_all += 1
            if not e.is_self_loop:
                n_inter += 1
    return n_inter / n_all if n_all else 0.0


def gid(
    community: Community, t_cur: int, window: tuple[int, float] | None = None
) -> float | None:
    """Interactions per ordered member pair by t_cur, divided by the
    observation window W = (t_cur - t0) / tau when one is given.
    Undefined (None) for singleton communities."""
    n = community.n_members
    if n < 2:
        return None
    n_inter = sum(1 for e in community.events if not e.is_self_loop and e.t <= t_cur)
    w = 1.0
    if window is not None:
        t0, tau = window
        w = (t_cur - t0) / tau
        if w <= 0:
            raise ValueError(f"observation window must be positive, got {w}")
    return n_inter / (n * (n - 1) * w)


def _mean(values: dict[int, float]) -> float:
    # ascending-UserId summation keeps runs reproducible bit-for-bit
    total = 0.0
    for u in sorted(values):
        total += values[u]
    return total / len(values)


def ei(community: Community, t_cur: int, cfg: ExcitationConfig) -> float:
    return _mean({i: ei_user(community, i, t_cur, cfg) for i in community.members})


def sit(community: Community, t_cur: int, cfg: ExcitationConfig) -> float:
    return _mean({i: sit_user(community, i, t_cur, cfg) for i in community.members})


def ced(community: Community, t_cur: int, cfg: ExcitationConfig) -> float:
    return _mean({i: ced_user(community, i, t_cur, cfg) for i in community.members})


def score_community(
    community: Community,
    t_cur: int,
    cfg: ExcitationConfig,
    window: tuple[int, float] | None = None,
) -> PsychScores:
    """All five measures plus the per-user breakdowns."""
    if not community.members:
        raise ValueError("cannot score an empty community")
    per_ei = {i: ei_user(community, i, t_cur, cfg) for i in community.members}
    per_sit = {i: sit_user(community, i, t_cur, cfg) for i in community.members}
    per_ced = {i: ced_user(community, i, t_cur, cfg) for i in community.members}
    return PsychScores(
        ei=_mean(per_ei),
        sit=_mean(per_sit),
        ced=_mean(per_ced),
        gip=gip(community, t_cur),
        gid=gid(community, t_cur, window),
        per_user_ei=per_ei,
        per_user_sit=per_sit,
        per_user_ced=per_ced,
        t_cur=t_cur,
        lambda0=cfg.lambda0,
        decay_kind=cfg.decay.kind,
        decay_rate=cfg.decay.rate,
        windowed=window is not None,
    )
