"""
solve - run one solver on an instance
"""

import argparse
import logging
import time

from greedykit.commands.common import (
    add_instance_arguments,
    add_oracle_arguments,
    add_sampling_arguments,
    emit,
    load_from_args,
    require,
    stochastic_config,
)
from greedykit.services.oracle_service import brute_force_opt
from greedykit.services.report_service import (
    build_run_report,
    run_report_rows,
    summarize_oracle,
    to_csv,
    to_json,
)
from greedykit.services.solver_service import ALGORITHMS, STOCHASTIC, SolverService, gap_diagnostic

logger = logging.getLogger(__name__)


def register(subparsers):
    parser = subparsers.add_parser("solve", help="Maximize f subject to |S| = k")
    add_instance_arguments(parser)
    parser.add_argument("--k", type=int, required=True, help="Number of elements to select")
    parser.add_argument("--algorithm", choices=ALGORITHMS, default="greedy")
    add_sampling_arguments(parser)
    add_oracle_arguments(parser)
    parser.add_argument("--output", choices=("json", "csv"), default="json")
    parser.set_defaults(handler=handle)
    return parser


def handle(args: argparse.Namespace) -> int:
    """Solve and print a RunReport"""
    config = None
    if args.algorithm == STOCHASTIC:
        config = stochastic_config(args)
        require(config is not None, "--algorithm stochastic needs --epsilon or --sample-size")

    instance = load_from_args(args)
    f = instance.function

    start = time.perf_counter()
    result = SolverService.solve(f, args.k, args.algorithm, config=config)
    wall_time = time.perf_counter() - start

    oracle_summary = None
    if args.with_oracle:
        oracle = brute_force_opt(f, args.k, cap=args.oracle_cap)
        oracle_summary = summarize_oracle(result, oracle, gap_diagnostic(result, oracle, f))

    report = build_run_report(instance, result, wall_time, oracle=oracle_summary)
    logger.info(f"solve: {args.algorithm} k={args.k} objective={report.objective}")

    if args.output == "csv":
        emit(to_csv(run_report_rows(report)))
    else:
        emit(to_json(report))
    return 0
