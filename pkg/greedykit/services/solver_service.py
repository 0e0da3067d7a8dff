"""
Solver Service - greedy maximization under a cardinality constraint

Three algorithms share one result shape and one tie-break (smallest element
index among equal gains, exact float comparison):

- greedy: evaluates every remaining candidate at every step
- lazy: keeps stale gains in a max-queue as upper bounds and only
  recomputes the entry at the top (valid for submodular f)
- stochastic: evaluates a uniform random sample of the remaining candidates

Every solver caches f(S) between steps, so each candidate costs exactly one
underlying evaluation; `evaluations` counts those calls.
"""

import heapq
import logging
import math
from dataclasses import dataclass
from typing import List, NamedTuple, Optional

import numpy as np
from pydantic import BaseModel

from greedykit.core.config import settings
from greedykit.core.exceptions import DomainError
from greedykit.core.rng import make_generator, sample_without_replacement
from greedykit.core.sets import SetFunction, Subset, wrap_counting
from greedykit.core.validators import validate_cardinality, validate_epsilon, validate_sample_size
from greedykit.services.oracle_service import OracleResult

logger = logging.getLogger(__name__)

GREEDY = "greedy"
LAZY = "lazy"
STOCHASTIC = "stochastic"
ALGORITHMS = (GREEDY, LAZY, STOCHASTIC)

GREEDY_GUARANTEE = 1.0 - 1.0 / math.e


class StepRecord(BaseModel):
    step: int
    element: int
    gain: float
    objective: float
    evaluations: int


class SolveResult(BaseModel):
    """Picks in order, the per-step trace and the evaluation count"""

    algorithm: str
    n: int
    k: int
    picks: List[int]
    trace: List[StepRecord]
    evaluations: int
    seed: Optional[int] = None
    sample_size: Optional[int] = None
    epsilon: Optional[float] = None

    @property
    def objective(self) -> float:
        return self.trace[-1].objective

    @property
    def selected(self) -> Subset:
        return Subset.from_indices(self.n, self.picks)


class LazyQueueEntry(NamedTuple):
    """Queue entry; cached_gain is an upper bound once stamp falls behind"""

    element: int
    cached_gain: float
    stamp: int
    objective: float

    def key(self):
        return (-self.cached_gain, self.element)


class GapDiagnostic(BaseModel):
    """Optimality gaps delta_l = OPT - f(S_l) along a solve"""

    optimum: float
    deltas: List[float]
    ratios: List[Optional[float]]
    contraction: float
    recursion_holds: bool
    violating_steps: List[int]


@dataclass(frozen=True)
class StochasticConfig:
    """Either epsilon or an explicit sample size, plus the seed"""

    epsilon: Optional[float] = None
    sample_size: Optional[int] = None
    seed: int = 0

    def __post_init__(self):
        if (self.epsilon is None) == (self.sample_size is None):
            raise DomainError("Provide exactly one of epsilon or sample size")
        if self.epsilon is not None:
            validate_epsilon(self.epsilon)
        else:
            validate_sample_size(self.sample_size)

    def resolve(self, n: int, k: int) -> int:
        if self.sample_size is not None:
            return self.sample_size
        return sample_size(n, k, self.epsilon)


def sample_size(n: int, k: int, epsilon: float) -> int:
    """
    Per-step sample size ceil((n / k) * ln(1 / epsilon)), at least 1

    Example:
        sample_size(100, 10, 0.1)  # 24
    """
    validate_cardinality(k, n)
    validate_epsilon(epsilon)
    return max(1, math.ceil((n / k) * math.log(1.0 / epsilon)))


def greedy_evaluations(n: int, k: int) -> int:
    """Evaluations spent by standard greedy: n + (n-1) + ... + (n-k+1)"""
    return n * k - k * (k - 1) // 2


def stochastic_evaluations(n: int, k: int, s: int) -> int:
    return sum(min(s, n - step) for step in range(k))


def greedy(f: SetFunction, k: int) -> SolveResult:
    """
    Standard greedy

    Args:
        f: Set function with f(empty) = 0
        k: Number of elements to pick, 1 <= k <= n

    Returns:
        SolveResult with k steps and n*k - k*(k-1)/2 evaluations

    Raises:
        DomainError: If k is out of range
    """
    n = f.n
    validate_cardinality(k, n)
    counter = wrap_counting(f)
    selected = Subset.empty(n)
    value = 0.0
    trace = []

    for step in range(1, k + 1):
        best_element = -1
        best_gain = -math.inf
        best_value = value
        for element in range(n):
            if element in selected:
                continue
            candidate = counter.evaluate(selected.add(element))
            gain = candidate - value
            if gain > best_gain:
                best_element, best_gain, best_value = element, gain, candidate
        selected = selected.add(best_element)
        value = best_value
        trace.append(StepRecord(step=step, element=best_element, gain=best_gain,
                                objective=value, evaluations=counter.count))
        logger.debug(f"greedy step {step}: picked {best_element} gain={best_gain} f={value}")

    logger.info(f"greedy: n={n} k={k} f={value} evaluations={counter.count}")
    return SolveResult(algorithm=GREEDY, n=n, k=k, picks=[t.element for t in trace],
                       trace=trace, evaluations=counter.count)


def lazy_greedy(f: SetFunction, k: int) -> SolveResult:
    """
    Lazy greedy

    The first step evaluates every singleton, exactly like standard greedy.
    Afterwards the queue is ordered by (cached gain desc, index asc): an entry
    at the top whose gain was computed against the current set is accepted;
    a stale one is recomputed and pushed back. Stale gains are upper bounds
    for submodular f, so the picks match standard greedy.
    """
    n = f.n
    validate_cardinality(k, n)
    counter = wrap_counting(f)
    selected = Subset.empty(n)
    value = 0.0
    trace = []

    queue = []
    for element in range(n):
        candidate = counter.evaluate(selected.add(element))
        entry = LazyQueueEntry(element=element, cached_gain=candidate, stamp=0, objective=candidate)
        queue.append((entry.key(), entry))
    heapq.heapify(queue)

    recomputed = 0
    for step in range(1, k + 1):
        while True:
            _, entry = heapq.heappop(queue)
            if entry.stamp == step - 1:
                break
            candidate = counter.evaluate(selected.add(entry.element))
            recomputed += 1
            entry = LazyQueueEntry(element=entry.element, cached_gain=candidate - value,
                                   stamp=step - 1, objective=candidate)
            heapq.heappush(queue, (entry.key(), entry))
        selected = selected.add(entry.element)
        value = entry.objective
        trace.append(StepRecord(step=step, element=entry.element, gain=entry.cached_gain,
                                objective=value, evaluations=counter.count))
        logger.debug(f"lazy step {step}: picked {entry.element} gain={entry.cached_gain} f={value}")

    logger.info(f"lazy: n={n} k={k} f={value} evaluations={counter.count} (recomputed {recomputed})")
    return SolveResult(algorithm=LAZY, n=n, k=k, picks=[t.element for t in trace],
                       trace=trace, evaluations=counter.count)


def stochastic_greedy(
    f: SetFunction,
    k: int,
    config: StochasticConfig,
    rng: Optional[np.random.Generator] = None,
) -> SolveResult:
    """
    Stochastic greedy

    Each step draws min(s, remaining) candidates uniformly without replacement
    and picks the best of them. Passing rng overrides the generator built from
    config.seed (benchmarks hand each trial its own stream).
    """
    n = f.n
    validate_cardinality(k, n)
    s = config.resolve(n, k)
    rng = make_generator(config.seed) if rng is None else rng
    counter = wrap_counting(f)
    selected = Subset.empty(n)
    value = 0.0
    trace = []

    for step in range(1, k + 1):
        pool = [element for element in range(n) if element not in selected]
        sample = sample_without_replacement(rng, pool, s)
        best_element = -1
        best_gain = -math.inf
        best_value = value
        for element in sorted(sample):
            candidate = counter.evaluate(selected.add(element))
            gain = candidate - value
            if gain > best_gain:
                best_element, best_gain, best_value = element, gain, candidate
        selected = selected.add(best_element)
        value = best_value
        trace.append(StepRecord(step=step, element=best_element, gain=best_gain,
                                objective=value, evaluations=counter.count))
        logger.debug(f"stochastic step {step}: sample={sorted(sample)} picked {best_element} f={value}")

    logger.info(f"stochastic: n={n} k={k} s={s} seed={config.seed} f={value} evaluations={counter.count}")
    return SolveResult(algorithm=STOCHASTIC, n=n, k=k, picks=[t.element for t in trace],
                       trace=trace, evaluations=counter.count, seed=config.seed,
                       sample_size=s, epsilon=config.epsilon)


def gap_diagnostic(result: SolveResult, oracle: OracleResult, f: SetFunction) -> GapDiagnostic:
    """
    Optimality gaps and their per-step contraction

    For greedy on a monotone submodular f each gap shrinks by at least a
    factor (1 - 1/k): delta_{l+1} <= (1 - 1/k) * delta_l.

    Raises:
        DomainError: If the oracle was computed for another k or ground set
    """
    if oracle.k != result.k:
        raise DomainError(f"oracle was computed for k={oracle.k}, result has k={result.k}")
    if oracle.n != result.n or f.n != result.n:
        raise DomainError("oracle, result and function must share one ground set")

    optimum = oracle.best_value
    objectives = [f.evaluate(Subset.from_indices(f.n, result.picks[:step]))
                  for step in range(result.k + 1)]
    deltas = [optimum - value for value in objectives]
    ratios = [deltas[l + 1] / deltas[l] if deltas[l] > 0 else None for l in range(result.k)]

    contraction = 1.0 - 1.0 / result.k
    tol = settings.VIOLATION_TOLERANCE * max(1.0, abs(optimum))
    violating = [l + 1 for l in range(result.k) if deltas[l + 1] > contraction * deltas[l] + tol]

    return GapDiagnostic(
        optimum=optimum,
        deltas=deltas,
        ratios=ratios,
        contraction=contraction,
        recursion_holds=not violating,
        violating_steps=violating,
    )


class SolverService:
    """Dispatch by algorithm tag"""

    ALGORITHMS = ALGORITHMS

    @classmethod
    def solve(
        cls,
        f: SetFunction,
        k: int,
        algorithm: str,
        config: Optional[StochasticConfig] = None,
        rng: Optional[np.random.Generator] = None,
    ) -> SolveResult:
        if algorithm == GREEDY:
            return greedy(f, k)
        if algorithm == LAZY:
            return lazy_greedy(f, k)
        if algorithm == STOCHASTIC:
            if config is None:
                raise DomainError("stochastic greedy needs --epsilon or --sample-size")
            return stochastic_greedy(f, k, config, rng=rng)
        raise DomainError(f"Unknown algorithm: {algorithm}")

    @classmethod
    def guarantee(cls, algorithm: str, epsilon: Optional[float] = None) -> Optional[float]:
        """Worst-case (expected, for stochastic) fraction of the optimum"""
        if algorithm in (GREEDY, LAZY):
            return GREEDY_GUARANTEE
        if algorithm == STOCHASTIC and epsilon is not None:
            return GREEDY_GUARANTEE - epsilon
        return None

    @classmethod
    def predicted_evaluations(cls, algorithm: str, n: int, k: int, s: Optional[int] = None) -> Optional[int]:
        """Exact count for greedy and stochastic; lazy has no closed form"""
        if algorithm == GREEDY:
            return greedy_evaluations(n, k)
        if algorithm == STOCHASTIC and s is not None:
            return stochastic_evaluations(n, k, s)
        return None
