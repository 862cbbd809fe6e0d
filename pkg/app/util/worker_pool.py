from concurrent.futures import ThreadPoolExecutor
import os

from app.util import log
from app.util.conf.configuration import Configuration


class WorkerPool(object):
    """
    A small wrapper around ThreadPoolExecutor used for chunked numerical work. Results always come back in input
    order, so every reduction done by the caller happens in a fixed order regardless of the thread count.

    numpy releases the GIL inside its array kernels, so threads give real speedups on the larger chunks.
    """

    def __init__(self, max_workers=None):
        """
        :param max_workers: the number of threads; defaults to the 'threads' configuration value
        :type max_workers: int | None
        """
        self._logger = log.get_logger(__name__)
        self._max_workers = max_workers or default_thread_count()
        self._executor = None

    @property
    def max_workers(self):
        return self._max_workers

    def map(self, function, items):
        """
        Apply function to every item and return the results as a list in input order. A single worker (or a single
        item) runs on the calling thread.

        :type function: callable
        :type items: list
        :rtype: list
        """
        items = list(items)
        if self._max_workers <= 1 or len(items) <= 1:
            return [function(item) for item in items]
        if self._executor is None:
            self._logger.debug('Starting {} worker threads.', self._max_workers)
            self._executor = ThreadPoolExecutor(max_workers=self._max_workers)
        return list(self._executor.map(function, items))

    def shutdown(self):
        if self._executor is not None:
            self._executor.shutdown(wait=True)
            self._executor = None

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        self.shutdown()


def default_thread_count():
    """
    :rtype: int
    """
    threads = Configuration.singleton().get('threads', None)
    return max(1, int(threads or os.cpu_count() or 1))


def chunked(count, chunk_size):
    """
    Split range(count) into consecutive slices of at most chunk_size elements.

    :type count: int
    :type chunk_size: int
    :rtype: list[slice]
    """
    return [slice(start, min(start + chunk_size, count)) for start in range(0, count, chunk_size)]
