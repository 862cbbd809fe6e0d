import math

from genty import genty, genty_args, genty_dataset
import numpy as np

from app.frames.frame_analysis import (FrameAnalysisConfig, FrameReport, accumulate_frame_matrix, condition_number,
                                       extended_frame_matrix, frame_bounds, frame_matrix, frame_matrix_from_signals)
from app.geometry.point_sequence import HyperbolicLattice, PointSequence
from app.special.wavelet_order import WaveletOrder
from app.transforms.spectral_signal import SpectralSignal
from app.transforms.wavelet_transform import basis_coefficient_rows
from app.util.exceptions import ConfigurationError, ConvergenceError
from app.util.worker_pool import WorkerPool
from test.framework.base_unit_test_case import BaseUnitTestCase


_ORDER = WaveletOrder(1, 2.0)


@genty
class TestFrameAnalysis(BaseUnitTestCase):

    @genty_dataset(
        not_an_order=genty_args(order=(1, 2.0)),
        not_a_sequence=genty_args(sequence=[1j, 2j]),
        zero_basis_size=genty_args(m_schedule=[0]),
        fractional_basis_size=genty_args(m_schedule=[2.5]),
        basis_alpha_too_small=genty_args(basis_alpha=-1.0),
        zero_tolerance=genty_args(extension_tolerance=0.0),
    )
    def test_invalid_configurations_raise_configuration_error(self, **overrides):
        arguments = {'order': _ORDER, 'sequence': PointSequence([1j])}
        arguments.update(overrides)
        order = arguments.pop('order')
        sequence = arguments.pop('sequence')

        with self.assertRaises(ConfigurationError):
            FrameAnalysisConfig(order, sequence, **arguments)

    def test_config_defaults(self):
        cfg = FrameAnalysisConfig(_ORDER, PointSequence([1j]), m_schedule=[4, 2])

        self.assertEqual(cfg.basis_size, 4)
        self.assertEqual(cfg.basis_alpha, 2.0)
        self.assertEqual(cfg.window.name, 'laguerre')
        self.assertEqual(cfg.quadrature_order, 80)
        self.assertFalse(cfg.extend, 'Explicit sequences are never extended.')

    def test_lattice_atoms_are_listed_j_major(self):
        cfg = FrameAnalysisConfig(_ORDER, HyperbolicLattice(2.0, 1.0, (0, 1), (0, 1)), extend=False)

        x, s = cfg.atom_locations()

        np.testing.assert_allclose(x, [0.0, 1.0, 0.0, 2.0])
        np.testing.assert_allclose(s, [1.0, 1.0, 2.0, 2.0])

    def test_accumulated_matrix_is_the_sum_of_rank_one_terms(self):
        rows = np.array([[1.0, 0.0], [0.0, 1j], [1.0, 1.0]])

        matrix = accumulate_frame_matrix(rows)

        np.testing.assert_allclose(matrix, [[2.0, 1.0], [1.0, 2.0]])

    def test_orthonormal_basis_signals_give_a_projection(self):
        signals = [SpectralSignal.basis_element(0, 1.5), SpectralSignal.basis_element(1, 1.5)]

        matrix = frame_matrix_from_signals(signals, 3, 1.5)

        np.testing.assert_allclose(matrix, np.diag([1.0, 1.0, 0.0]), atol=1e-10)

    def test_zero_signals_contribute_nothing(self):
        matrix = frame_matrix_from_signals([SpectralSignal(2.0, [0.0, 0.0])], 2, 2.0)

        np.testing.assert_array_equal(matrix, np.zeros((2, 2)))

    def test_frame_matrix_is_hermitian_and_positive(self):
        cfg = FrameAnalysisConfig(_ORDER, PointSequence([1j, 1 + 2j, -0.5 + 0.5j]), basis_size=4)

        matrix = frame_matrix(cfg)

        np.testing.assert_allclose(matrix, matrix.conj().T, atol=1e-12)
        self.assertGreaterEqual(np.min(np.linalg.eigvalsh(matrix)), -1e-12)

    def test_smallest_eigenvalue_never_decreases_as_atoms_are_added(self):
        cfg = FrameAnalysisConfig(_ORDER, HyperbolicLattice(2.0, 1.0, (-1, 1), (-2, 2)), basis_size=4, extend=False)
        x, s = cfg.atom_locations()
        rows = basis_coefficient_rows(cfg.basis_size, cfg.basis_alpha, cfg.window, x, s, cfg.quadrature_order)

        previous = None
        for count in range(1, len(rows) + 1):
            smallest = np.min(np.linalg.eigvalsh(accumulate_frame_matrix(rows[:count])))
            if previous is not None:
                self.assertGreaterEqual(smallest, previous - 1e-10, '{} atoms'.format(count))
            previous = smallest

    def test_frame_matrix_does_not_depend_on_the_pool(self):
        cfg = FrameAnalysisConfig(_ORDER, HyperbolicLattice(2.0, 1.0, (-1, 1), (-2, 2)), basis_size=3, extend=False)

        np.testing.assert_array_equal(frame_matrix(cfg), frame_matrix(cfg, WorkerPool(max_workers=3)))

    def test_frame_bounds_follow_the_schedule(self):
        cfg = FrameAnalysisConfig(_ORDER, PointSequence([1j, 1 + 2j, -0.5 + 0.5j, 2 + 1j]), m_schedule=[1, 2, 4])

        report = frame_bounds(cfg)

        sizes = [entry[0] for entry in report.schedule]
        lower_bounds = [entry[1] for entry in report.schedule]
        upper_bounds = [entry[2] for entry in report.schedule]
        self.assertEqual(sizes, [1, 2, 4])
        for smaller, larger in zip(lower_bounds, lower_bounds[1:]):
            self.assertLessEqual(larger, smaller + 1e-12)
        for smaller, larger in zip(upper_bounds, upper_bounds[1:]):
            self.assertGreaterEqual(larger, smaller - 1e-12)
        self.assertEqual((report.a_est, report.b_est), tuple(report.schedule[-1][1:]))

    def test_frame_bounds_match_numpy_eigenvalues(self):
        cfg = FrameAnalysisConfig(_ORDER, PointSequence([1j, 1 + 2j, -0.5 + 0.5j]), basis_size=3)
        expected = np.linalg.eigvalsh(frame_matrix(cfg))

        report = frame_bounds(cfg)

        self.assertAlmostEqual(report.b_est, expected[-1], delta=1e-9 * expected[-1])
        self.assertAlmostEqual(report.a_est, max(expected[0], 0.0), delta=1e-9 * expected[-1])

    def test_single_atom_has_no_lower_bound(self):
        cfg = FrameAnalysisConfig(_ORDER, PointSequence([1j]), basis_size=2)

        report = frame_bounds(cfg)

        self.assertAlmostEqual(report.a_est, 0.0, places=10)
        self.assertGreater(report.b_est, 0.0)
        self.assertIsNone(report.metadata['separation'])
        self.assertEqual(report.atom_norm_sq, cfg.window.norm_sq())

    def test_unextended_lattice_metadata(self):
        lattice = HyperbolicLattice(2.0, 1.0, (0, 1), (-1, 1))
        cfg = FrameAnalysisConfig(_ORDER, lattice, basis_size=2, extend=False)

        _, metadata = extended_frame_matrix(cfg)

        self.assertFalse(metadata['extended'])
        self.assertEqual(metadata['atom_count'], 6)
        self.assertEqual(metadata['a'], 2.0)
        self.assertEqual(metadata['k_range'], [-1, 1])

    def test_extension_stops_at_the_atom_budget(self):
        cfg = FrameAnalysisConfig(_ORDER, HyperbolicLattice(2.0, 1.0, (0, 0), (-2, 2)), basis_size=2, max_atoms=10)

        with self.assertRaises(ConvergenceError):
            extended_frame_matrix(cfg)

    def test_report_to_dict(self):
        report = FrameReport(0.5, 2.0, None, 2.0, math.pi, 2.0, {'atom_count': 3}, [(1, 1.0, 1.5), (2, 0.5, 2.0)])

        summary = report.to_dict()

        self.assertEqual(summary['schedule'],
                         [{'M': 1, 'a_est': 1.0, 'b_est': 1.5}, {'M': 2, 'a_est': 0.5, 'b_est': 2.0}])
        self.assertIsNone(summary['density_estimate'])
        self.assertEqual(summary['metadata'], {'atom_count': 3})

    @genty_dataset(
        finite=(2.0, 4.0, 2.0),
        no_lower_bound=(0.0, 1.0, math.inf),
    )
    def test_condition_number(self, a_est, b_est, expected):
        self.assertEqual(condition_number(a_est, b_est), expected)
