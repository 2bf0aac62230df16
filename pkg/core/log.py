# log.py
"""Logging setup for the command-line entry point. Library modules only call getLogger."""
from __future__ import annotations

import logging
import sys

LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"


def configure_logging(verbosity: int = 0) -> None:
    """Route library logs to stderr.

    Args:
        verbosity: 0 -> WARNING, 1 -> INFO, 2 or more -> DEBUG

    Returns:
        None
    """
    if verbosity >= 2:
        level = logging.DEBUG
    elif verbosity == 1:
        level = logging.INFO
    else:
        level = logging.WARNING
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr, force=True)
