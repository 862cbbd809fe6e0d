from genty import genty, genty_dataset

from app.util.conf.configuration import Configuration
from app.util.worker_pool import WorkerPool, chunked, default_thread_count
from test.framework.base_unit_test_case import BaseUnitTestCase


@genty
class TestWorkerPool(BaseUnitTestCase):

    @genty_dataset(
        inline=(1,),
        threaded=(4,),
    )
    def test_map_keeps_input_order(self, max_workers):
        with WorkerPool(max_workers=max_workers) as pool:
            results = pool.map(lambda item: item * item, range(20))

        self.assertEqual(results, [item * item for item in range(20)])

    def test_single_worker_never_starts_threads(self):
        pool = WorkerPool(max_workers=1)

        pool.map(str, [1, 2, 3])

        self.assertIsNone(pool._executor)

    def test_shutdown_can_be_called_twice(self):
        pool = WorkerPool(max_workers=2)
        pool.map(str, [1, 2, 3])

        pool.shutdown()
        pool.shutdown()

        self.assertIsNone(pool._executor)

    def test_thread_count_comes_from_the_configuration(self):
        Configuration['threads'] = 3

        self.assertEqual(default_thread_count(), 3)
        self.assertEqual(WorkerPool().max_workers, 3)

    def test_unset_thread_count_uses_the_cpu_count(self):
        Configuration['threads'] = None
        self.patch('app.util.worker_pool.os.cpu_count').return_value = 6

        self.assertEqual(default_thread_count(), 6)

    @genty_dataset(
        exact=(6, 3, [slice(0, 3), slice(3, 6)]),
        remainder=(7, 3, [slice(0, 3), slice(3, 6), slice(6, 7)]),
        empty=(0, 3, []),
    )
    def test_chunked(self, count, chunk_size, expected):
        self.assertEqual(chunked(count, chunk_size), expected)
