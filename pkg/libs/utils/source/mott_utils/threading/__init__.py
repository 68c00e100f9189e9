# :coding: utf-8
# :copyright: Copyright (c) 2024 ftrack

import os
import logging
from concurrent.futures import ThreadPoolExecutor

logger = logging.getLogger(__name__)


def default_thread_count():
    '''Return the hardware parallelism, at least one.'''
    return max(1, os.cpu_count() or 1)


class OrderedPool(object):
    '''Worker pool returning results in submission order.

    The pool changes wall time only: results are collected in the order
    of the input items whatever the number of *threads*, and a pool of a
    single thread runs the tasks inline.
    '''

    @property
    def threads(self):
        return self._threads

    def __init__(self, threads=None):
        self._threads = int(threads or default_thread_count())
        if self._threads < 1:
            raise ValueError(
                'Thread count must be positive, got {}'.format(threads)
            )

    def map(self, func, items):
        '''Return [func(item) for item in *items*], in order.'''
        items = list(items)
        if self.threads == 1 or len(items) < 2:
            return [func(item) for item in items]
        logger.debug(
            'Dispatching {} tasks on {} threads'.format(
                len(items), self.threads
            )
        )
        with ThreadPoolExecutor(
            max_workers=self.threads, thread_name_prefix='mott'
        ) as executor:
            return list(executor.map(func, items))

    def starmap(self, func, items):
        '''Return [func(*item) for item in *items*], in order.'''
        return self.map(lambda item: func(*item), items)
