"""
oracle - exact optimum by enumerating all k-subsets
"""

import argparse

from pydantic import BaseModel

from greedykit.commands.common import add_instance_arguments, emit, load_from_args
from greedykit.core.config import settings
from greedykit.services.oracle_service import OracleResult, brute_force_opt
from greedykit.services.report_service import InstanceDescriptor, describe_instance, to_json


class OracleReport(BaseModel):
    instance: InstanceDescriptor
    oracle: OracleResult


def register(subparsers):
    parser = subparsers.add_parser("oracle", help="Brute-force optimum over all k-subsets")
    add_instance_arguments(parser)
    parser.add_argument("--k", type=int, required=True)
    parser.add_argument("--oracle-cap", type=int, default=None,
                        help=f"Largest C(n,k) enumeration allowed (default: {settings.ORACLE_CAP})")
    parser.set_defaults(handler=handle)
    return parser


def handle(args: argparse.Namespace) -> int:
    instance = load_from_args(args)
    oracle = brute_force_opt(instance.function, args.k, cap=args.oracle_cap)
    emit(to_json(OracleReport(instance=describe_instance(instance), oracle=oracle)))
    return 0
