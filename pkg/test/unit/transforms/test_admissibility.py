from genty import genty, genty_dataset

from app.special.wavelet_order import WaveletOrder
from app.transforms.admissibility import (IsometryResidual, admissibility_constant, central_difference,
                                          derivative_relation_residual, isometry_residual)
from app.transforms.spectral_signal import SpectralSignal
from app.util.exceptions import ParameterDomainError, StepSizeError
from test.framework.base_unit_test_case import BaseUnitTestCase


@genty
class TestAdmissibility(BaseUnitTestCase):

    @genty_dataset(
        lowest_degree=(WaveletOrder(0, 2.0), 2.0),
        first_degree=(WaveletOrder(1, 1.0), 4.0),
    )
    def test_admissibility_constant(self, order, expected):
        self.assertAlmostEqual(admissibility_constant(order), expected, places=12)

    def test_admissibility_requires_positive_alpha(self):
        with self.assertRaises(ParameterDomainError):
            admissibility_constant(WaveletOrder(1, 0.0))

    def test_isometry_of_the_zero_signal(self):
        residual = isometry_residual(SpectralSignal(2.0, [0.0]), WaveletOrder(0, 2.0), (-1.0, 1.0), (0.1, 1.0), 3, 3)

        self.assertEqual(residual.lhs, 0.0)
        self.assertEqual(residual.rel_err, 0.0)

    def test_isometry_residual_relative_error(self):
        self.assertAlmostEqual(IsometryResidual(0.99, 1.0).rel_err, 0.01, places=14)
        self.assertEqual(IsometryResidual(0.0, 0.0).to_dict(), {'lhs': 0.0, 'rhs': 0.0, 'rel_err': 0.0})

    @genty_dataset(
        first_derivative=(lambda z: z ** 3, 1, 1e-3, 3 * (1 + 1j) ** 2, 1e-6),
        second_derivative=(lambda z: z ** 2, 2, 1e-2, 2.0, 1e-8),
    )
    def test_central_difference(self, function, k, h, expected, tolerance):
        self.assertAlmostEqual(central_difference(function, 1 + 1j, k, h), expected, delta=tolerance)

    @genty_dataset(
        first_order=(1,),
        second_order=(2,),
    )
    def test_derivative_relation_holds_for_a_smooth_signal(self, k):
        signal = SpectralSignal(2.0, [1.0, 0.5j])

        self.assertLess(derivative_relation_residual(signal, 2.0, 0.5 + 1.0j, k), 1e-5)

    def test_derivative_relation_of_order_zero_is_trivial(self):
        self.assertEqual(derivative_relation_residual(SpectralSignal(2.0, [1.0]), 2.0, 1j, 0), 0.0)

    @genty_dataset(
        negative_order=(-1, None, 1j),
        step_too_large=(2, 0.01, 1 + 0.001j),
        zero_step=(1, 0.0, 1j),
    )
    def test_invalid_derivative_relation_arguments(self, k, h, z):
        with self.assertRaises(ParameterDomainError):
            derivative_relation_residual(SpectralSignal(2.0, [1.0]), 2.0, z, k, h=h)

    def test_inconsistent_difference_quotients_raise(self):
        # a step comparable to Im z makes the h and h/2 estimates disagree
        with self.assertRaises(StepSizeError):
            derivative_relation_residual(SpectralSignal(2.0, [1.0]), 2.0, 0.5j, 2, h=0.24)
