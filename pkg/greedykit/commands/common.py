"""
Arguments and helpers shared by the subcommands
"""

import argparse
import sys
from typing import Optional

from greedykit.core.config import settings
from greedykit.core.exceptions import UsageError
from greedykit.services.instance_service import KINDS, InstanceFile, load_instance, parse_labels
from greedykit.services.solver_service import StochasticConfig


def add_instance_arguments(parser: argparse.ArgumentParser):
    parser.add_argument("--input", required=True, help="Instance file (.csv, .weights or .table)")
    parser.add_argument("--kind", choices=KINDS, help="Override the kind inferred from the extension")
    parser.add_argument("--header", action="store_true", help="Skip the first row of a CSV matrix")
    parser.add_argument("--labels", help="File with one display label per element")


def add_sampling_arguments(parser: argparse.ArgumentParser):
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--epsilon", type=float, help="Stochastic accuracy, 0 < epsilon < 1")
    group.add_argument("--sample-size", type=int, help="Explicit stochastic sample size per step")
    parser.add_argument("--seed", type=int, default=settings.DEFAULT_SEED,
                        help=f"Random seed (default: {settings.DEFAULT_SEED})")


def add_oracle_arguments(parser: argparse.ArgumentParser):
    parser.add_argument("--with-oracle", action="store_true", help="Also compute the exact optimum")
    parser.add_argument("--oracle-cap", type=int, default=None,
                        help=f"Largest C(n,k) enumeration allowed (default: {settings.ORACLE_CAP})")


def load_from_args(args) -> InstanceFile:
    labels = parse_labels(args.labels) if args.labels else None
    return load_instance(args.input, kind=args.kind, header=args.header, labels=labels)


def stochastic_config(args, default_epsilon: Optional[float] = None) -> Optional[StochasticConfig]:
    """StochasticConfig from --epsilon / --sample-size / --seed"""
    epsilon = args.epsilon
    if epsilon is None and args.sample_size is None:
        if default_epsilon is None:
            return None
        epsilon = default_epsilon
    return StochasticConfig(epsilon=epsilon, sample_size=args.sample_size, seed=args.seed)


def require(condition: bool, message: str):
    if not condition:
        raise UsageError(message)


def emit(text: str):
    sys.stdout.write(text)
    if not text.endswith("\n"):
        sys.stdout.write("\n")
    sys.stdout.flush()
