"""
Logging configuration for the command-line tools
"""

import logging
import sys
from typing import Optional

from greedykit.core.config import settings


def setup_logging(level: Optional[str] = None):
    """Configure logging for the toolkit

    Reports are written to stdout, so log records always go to stderr.
    """

    level_name = (level or settings.LOG_LEVEL).upper()
    log_level = getattr(logging, level_name, logging.WARNING)

    logging.basicConfig(
        level=log_level,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=[
            logging.StreamHandler(sys.stderr)
        ],
        force=True,
    )

    # numpy / hypothesis chatter stays out of reports
    logging.getLogger("hypothesis").setLevel(logging.WARNING)
