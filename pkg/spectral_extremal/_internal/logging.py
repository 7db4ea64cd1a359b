"""
File-only logging for per-task timings of the oracle and the limit tables, which
are too noisy for the console. Records go to "logs/internal.log" inside the cache
directory, and only once enable() has run with SPECTRAL_EXTREMAL_ENABLE_INTERNAL_LOG
set to 1 or true.
"""

import os

from loguru import logger

from ..config import LOGS_DIR

_LEVEL = "SPECTRAL_INTERNAL"
_LOGFILE = LOGS_DIR / "internal.log"
_handler_id = None

# just below loguru's DEBUG (10), so console sinks never show it
logger.level(name=_LEVEL, no=9)


def enable():
    """
    Adds the log file sink. Writing to the filesystem is opt-in, so this does
    nothing unless the env variable is set. Calling it twice adds one sink.
    """
    global _handler_id
    flag = os.environ.get("SPECTRAL_EXTREMAL_ENABLE_INTERNAL_LOG", "0").lower()
    if flag not in ("1", "true") or _handler_id is not None:
        return
    _handler_id = logger.add(
        _LOGFILE,
        level=_LEVEL,
        filter=lambda record: record["level"].name == _LEVEL,
        colorize=False,
        rotation="10 MB",
        retention=3,
    )


def log(*args, **kwargs):
    if _handler_id is None:
        return
    logger.opt(depth=1).log(_LEVEL, *args, **kwargs)
