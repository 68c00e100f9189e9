# :coding: utf-8
# :copyright: Copyright (c) 2024 ftrack

import time
import logging
from functools import wraps


def log_duration(func):
    """Decorator logging the wall time of *func* on its module logger."""
    logger = logging.getLogger(func.__module__)

    @wraps(func)
    def wrapper(*args, **kwargs):
        start = time.perf_counter()
        try:
            return func(*args, **kwargs)
        finally:
            logger.info(
                '{} finished in {:.3f}s'.format(
                    func.__name__, time.perf_counter() - start
                )
            )

    return wrapper
