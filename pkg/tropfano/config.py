#!/usr/bin/env python

"""Configuration read from the environment."""

import logging
import os

__author__ = "tropfano developers"
__copyright__ = "Copyright (c) 2024, tropfano developers"
__license__ = "BSD"
__version__ = "0.1.0"


THREADS_VAR = "TROPFANO_THREADS"
LOGLEVEL_VAR = "TROPFANO_LOGLEVEL"


def threads():
    """Number of worker processes allowed, from TROPFANO_THREADS (default 1)."""
    value = os.environ.get(THREADS_VAR, "").strip()
    if value == "":
        return 1
    try:
        n = int(value)
    except ValueError:
        raise ValueError("{} must be a positive integer, got {!r}.".format(THREADS_VAR, value))
    if n < 1:
        raise ValueError("{} must be a positive integer, got {!r}.".format(THREADS_VAR, value))
    return n


def loglevel(default = logging.WARNING):
    """Logging level named by TROPFANO_LOGLEVEL, or default."""
    value = os.environ.get(LOGLEVEL_VAR, "").strip()
    if value == "":
        return default
    level = logging.getLevelName(value.upper())
    if not isinstance(level, int):
        raise ValueError("{} is not a logging level: {!r}.".format(LOGLEVEL_VAR, value))
    return level
