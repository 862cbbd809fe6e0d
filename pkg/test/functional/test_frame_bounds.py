import math

from app.frames.frame_analysis import FrameAnalysisConfig, frame_bounds
from app.geometry.point_sequence import HyperbolicLattice
from app.special.wavelet_order import WaveletOrder
from test.framework.functional.base_functional_test_case import BaseFunctionalTestCase


class TestFrameBounds(BaseFunctionalTestCase):

    def _report(self, b_log_a, m_schedule):
        lattice = HyperbolicLattice(2, b_log_a / math.log(2), (-4, 4), (-8, 8))
        cfg = FrameAnalysisConfig(WaveletOrder(0, 2), lattice, m_schedule=m_schedule)
        return frame_bounds(cfg, self.worker_pool)

    def test_dense_lattice_has_a_positive_lower_bound_on_every_subspace(self):
        report = self._report(math.pi / 2, [4, 8])

        self.assertEqual([size for size, _, _ in report.schedule], [4, 8])
        for size, a_est, b_est in report.schedule:
            self.assertGreater(a_est, 0, 'a_est should be positive for M={}'.format(size))
            self.assertLessEqual(a_est, b_est)
        self.assertLess(report.metadata['b_log_a'], report.lattice_threshold)
        self.assertTrue(report.metadata['separated'])

    def test_lower_bounds_do_not_grow_with_the_subspace(self):
        report = self._report(math.pi / 2, [4, 8])

        (_, small_a, small_b), (_, large_a, large_b) = report.schedule
        # The leading block of S on the larger subspace contains the smaller one.
        self.assertLessEqual(large_a, small_a * (1 + 1e-9))
        self.assertGreaterEqual(large_b, small_b * (1 - 1e-9))
