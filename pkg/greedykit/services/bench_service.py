"""
Bench Service - side-by-side runs of the three solvers

Greedy and lazy are deterministic and run once; stochastic runs once per
trial, trial i drawing from child stream i of the base seed. Each trial owns
its own counting wrapper and stream, so trials may run on worker threads;
rows always come back ordered by (algorithm, trial).
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Tuple

import numpy as np

from greedykit.core.rng import spawn_streams
from greedykit.core.sets import SetFunction
from greedykit.services.oracle_service import OracleResult
from greedykit.services.report_service import BenchRow, TrialRow, optimum_ratio
from greedykit.services.solver_service import (
    ALGORITHMS,
    GREEDY,
    LAZY,
    STOCHASTIC,
    SolveResult,
    SolverService,
    StochasticConfig,
    greedy,
    lazy_greedy,
    stochastic_greedy,
)

logger = logging.getLogger(__name__)


class BenchService:
    """Runs and summarizes benchmark trials"""

    @classmethod
    def run_trials(
        cls,
        f: SetFunction,
        k: int,
        config: StochasticConfig,
        trials: int,
        workers: int = 1,
    ) -> List[Tuple[str, int, SolveResult]]:
        """
        Run greedy, lazy and `trials` stochastic solves

        Returns:
            (algorithm, trial index, result) triples ordered by (algorithm, trial)
        """
        results = [(GREEDY, 0, greedy(f, k)), (LAZY, 0, lazy_greedy(f, k))]
        streams = spawn_streams(config.seed, trials)

        def run(trial: int) -> SolveResult:
            return stochastic_greedy(f, k, config, rng=streams[trial])

        if workers > 1:
            with ThreadPoolExecutor(max_workers=workers) as executor:
                stochastic = list(executor.map(run, range(trials)))
        else:
            stochastic = [run(trial) for trial in range(trials)]

        results.extend((STOCHASTIC, trial, result) for trial, result in enumerate(stochastic))
        logger.info(f"Bench: n={f.n} k={k} trials={trials} workers={workers}")
        order = {name: i for i, name in enumerate(ALGORITHMS)}
        return sorted(results, key=lambda item: (order[item[0]], item[1]))

    @classmethod
    def trial_rows(
        cls,
        results: List[Tuple[str, int, SolveResult]],
        oracle: Optional[OracleResult] = None,
    ) -> List[TrialRow]:
        return [
            TrialRow(
                algorithm=algorithm,
                trial=trial,
                objective=result.objective,
                evaluations=result.evaluations,
                picks=result.picks,
                ratio=optimum_ratio(result.objective, oracle.best_value) if oracle else None,
            )
            for algorithm, trial, result in results
        ]

    @classmethod
    def summarize(
        cls,
        results: List[Tuple[str, int, SolveResult]],
        config: StochasticConfig,
        oracle: Optional[OracleResult] = None,
    ) -> List[BenchRow]:
        """One summary row per algorithm"""
        rows = []
        for algorithm in ALGORITHMS:
            runs = [result for name, _, result in results if name == algorithm]
            if not runs:
                continue
            first = runs[0]
            objectives = np.array([r.objective for r in runs], dtype=np.float64)
            evaluations = np.array([r.evaluations for r in runs], dtype=np.int64)
            stderr = float(objectives.std(ddof=1) / np.sqrt(len(runs))) if len(runs) > 1 else 0.0

            row = BenchRow(
                algorithm=algorithm,
                n=first.n,
                k=first.k,
                trials=len(runs),
                seed=config.seed if algorithm == STOCHASTIC else None,
                sample_size=first.sample_size,
                epsilon=first.epsilon,
                objective_mean=float(objectives.mean()),
                objective_min=float(objectives.min()),
                objective_max=float(objectives.max()),
                objective_stderr=stderr,
                evaluations_mean=float(evaluations.mean()),
                evaluations_min=int(evaluations.min()),
                evaluations_max=int(evaluations.max()),
                predicted_evaluations=SolverService.predicted_evaluations(
                    algorithm, first.n, first.k, first.sample_size
                ),
            )
            if oracle is not None:
                ratios = [optimum_ratio(r.objective, oracle.best_value) for r in runs]
                bound = SolverService.guarantee(algorithm, first.epsilon)
                row.oracle_value = oracle.best_value
                row.ratio_mean = float(np.mean(ratios))
                row.ratio_min = float(np.min(ratios))
                row.bound = bound
                if bound is not None:
                    # stochastic guarantee holds in expectation, the others per run
                    observed = row.ratio_mean if algorithm == STOCHASTIC else row.ratio_min
                    row.meets_bound = observed >= bound - 1e-9
            rows.append(row)
        return rows
