"""Church-arithmetic benchmark: beta steps and wall time per strategy."""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass

from .church import church_suite
from .normalizers import normalize
from .oracle import Budget, Normalized, oracle_normalize
from .syntax import size

BENCH_STRATEGIES = ("oracle", "cbn", "cbv", "nbe")
SUITES = ("church",)


@dataclass(frozen=True)
class BenchRecord:
    case: str
    strategy: str
    beta_steps: int
    wall_time: float  # milliseconds
    result_size: int

    def to_json(self):
        return asdict(self)


def run_strategy(term, strategy, fuel):
    """Returns ``(outcome, seconds)`` for one of :data:`BENCH_STRATEGIES`."""
    budget = Budget(fuel)
    start = time.perf_counter()
    if strategy == "oracle":
        outcome = oracle_normalize(term, budget)
    else:
        outcome = normalize(term, strategy, budget)
    return outcome, time.perf_counter() - start


def run_bench(suite="church", max_n=6, fuel=100_000, strategies=BENCH_STRATEGIES):
    """Yield ``(BenchRecord, outcome)`` for every case and strategy, sequentially."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; available: {', '.join(SUITES)}")
    for label, term, _expected in church_suite(max_n):
        for strategy in strategies:
            outcome, seconds = run_strategy(term, strategy, fuel)
            result_size = size(outcome.result) if isinstance(outcome, Normalized) else 0
            record = BenchRecord(label, strategy, outcome.steps,
                                 round(seconds * 1000, 3), result_size)
            yield record, outcome
