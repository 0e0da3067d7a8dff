"""
check - verify monotonicity and submodularity of an instance
"""

import argparse
import logging
from typing import List

from pydantic import BaseModel

from greedykit.commands.common import add_instance_arguments, emit, load_from_args, require
from greedykit.core.config import settings
from greedykit.services.checker_service import MODES, PROPERTIES, PropertyChecker, PropertyReport
from greedykit.services.report_service import InstanceDescriptor, describe_instance, to_json

logger = logging.getLogger(__name__)


class CheckReport(BaseModel):
    instance: InstanceDescriptor
    all_hold: bool
    properties: List[PropertyReport]


def register(subparsers):
    parser = subparsers.add_parser("check", help="Check monotonicity / submodularity")
    add_instance_arguments(parser)
    parser.add_argument("--property", choices=PROPERTIES + ("all",), default="all")
    parser.add_argument("--mode", choices=MODES, default="exhaustive")
    parser.add_argument("--budget", type=int, default=settings.CHECK_BUDGET,
                        help=f"Samples in sampled mode (default: {settings.CHECK_BUDGET})")
    parser.add_argument("--seed", type=int, default=settings.DEFAULT_SEED)
    parser.set_defaults(handler=handle)
    return parser


def handle(args: argparse.Namespace) -> int:
    """Exit 0 when every requested property holds, 1 otherwise"""
    require(args.budget >= 1, "--budget must be at least 1")
    instance = load_from_args(args)
    properties = PROPERTIES if args.property == "all" else (args.property,)

    reports = [
        PropertyChecker.check(instance.function, prop, mode=args.mode, budget=args.budget, seed=args.seed)
        for prop in properties
    ]
    report = CheckReport(
        instance=describe_instance(instance),
        all_hold=all(r.holds for r in reports),
        properties=reports,
    )
    emit(to_json(report))
    if not report.all_hold:
        failed = [r.property for r in reports if not r.holds]
        logger.warning(f"check: {', '.join(failed)} violated on {instance.path}")
        return 1
    return 0
