"""
bench - compare greedy, lazy and stochastic greedy on one instance
"""

import argparse
import logging

from greedykit.commands.common import (
    add_instance_arguments,
    add_oracle_arguments,
    add_sampling_arguments,
    emit,
    load_from_args,
    require,
    stochastic_config,
)
from greedykit.core.config import settings
from greedykit.services.bench_service import BenchService
from greedykit.services.oracle_service import brute_force_opt
from greedykit.services.report_service import to_csv, to_json_lines

logger = logging.getLogger(__name__)

DEFAULT_EPSILON = 0.1


def register(subparsers):
    parser = subparsers.add_parser("bench", help="Benchmark all three solvers")
    add_instance_arguments(parser)
    parser.add_argument("--k", type=int, required=True)
    parser.add_argument("--trials", type=int, default=settings.BENCH_TRIALS,
                        help=f"Stochastic trials (default: {settings.BENCH_TRIALS})")
    parser.add_argument("--workers", type=int, default=settings.BENCH_WORKERS,
                        help="Threads for stochastic trials")
    parser.add_argument("--per-trial", action="store_true", help="Also emit one row per trial")
    add_sampling_arguments(parser)
    add_oracle_arguments(parser)
    parser.add_argument("--output", choices=("json", "csv"), default="json",
                        help="json emits JSON lines")
    parser.set_defaults(handler=handle)
    return parser


def handle(args: argparse.Namespace) -> int:
    require(args.trials >= 1, "--trials must be at least 1")
    require(args.workers >= 1, "--workers must be at least 1")
    config = stochastic_config(args, default_epsilon=DEFAULT_EPSILON)

    instance = load_from_args(args)
    f = instance.function
    oracle = brute_force_opt(f, args.k, cap=args.oracle_cap) if args.with_oracle else None

    results = BenchService.run_trials(f, args.k, config, args.trials, workers=args.workers)
    rows = []
    if args.per_trial:
        rows.extend(BenchService.trial_rows(results, oracle))
    rows.extend(BenchService.summarize(results, config, oracle))

    if args.output == "csv":
        summaries = [row.model_dump() for row in rows if row.kind == "summary"]
        trials = [row.model_dump() for row in rows if row.kind == "trial"]
        emit(to_csv(trials) + "\n" + to_csv(summaries) if trials else to_csv(summaries))
    else:
        emit(to_json_lines(rows))
    return 0
