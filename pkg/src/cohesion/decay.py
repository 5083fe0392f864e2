"""Time-decay kernels shared by the sentiment-based measures."""

from __future__ import annotations

import math
from dataclasses import dataclass

EXPONENTIAL = "exponential"
POLYNOMIAL = "polynomial"

DEFAULT_RATE = 0.0001


@dataclass(frozen=True)
class DecaySpec:
    """A kernel family plus its rate.

    exponential: phi(d) = exp(-rate * d), rate >= 0
    polynomial:  phi(d) = (d + 1) ** -rate, rate > 0

    Both satisfy phi(0) = 1 and are non-increasing in d. The rate applies
    to deltas measured in the ingestion time unit (seconds).
    """

    kind: str = EXPONENTIAL
    rate: float = DEFAULT_RATE

    def __post_init__(self):
        if self.kind not in (EXPONENTIAL, POLYNOMIAL):
            raise ValueError(f"unknown decay kind: {self.kind!r}")
        if self.kind == EXPONENTIAL and self.rate < 0:
            raise ValueError("exponential decay rate must be >= 0")
        if self.kind == POLYNOMIAL and self.rate <= 0:
            raise ValueError("polynomial decay rate must be > 0")


def phi(spec: DecaySpec, delta: float) -> float:
    """Evaluate the kernel at a non-negative age delta = t_cur - t."""
    if delta < 0:
        raise ValueError(f"decay delta must be non-negative, got {delta}")
    if spec.kind == EXPONENTIAL:
        return math.exp(-spec.rate * delta)
    return (delta + 1.0) ** -spec.rate
