from genty import genty, genty_dataset
import numpy as np

from app.special.laguerre import laguerre_function
from app.special.wavelet_order import WaveletOrder
from app.transforms.spectral_signal import SpectralSignal, combination
from app.transforms.time_scale_point import TimeScalePoint
from app.util.exceptions import ParameterDomainError
from test.framework.base_unit_test_case import BaseUnitTestCase


@genty
class TestSpectralSignal(BaseUnitTestCase):

    def test_basis_element_has_unit_norm(self):
        signal = SpectralSignal.basis_element(2, 1.0)

        np.testing.assert_array_equal(signal.coefficients, [0, 0, 1])
        self.assertEqual(signal.degree, 2)
        self.assertEqual(signal.norm_sq(), 1.0)
        self.assertFalse(signal.is_zero())

    def test_laguerre_function_signal_has_the_laguerre_function_as_spectrum(self):
        t = np.linspace(0.1, 30.0, 50)
        signal = SpectralSignal.from_laguerre_function(2, 1.0)

        np.testing.assert_allclose(signal.spectrum(t), laguerre_function(WaveletOrder(2, 1.0), t),
                                   rtol=1e-12, atol=1e-15)

    def test_spectrum_vanishes_for_non_positive_frequencies(self):
        signal = SpectralSignal(0.5, [1.0, 2.0])

        np.testing.assert_array_equal(signal.spectrum(np.array([-2.0, 0.0])), [0, 0])

    def test_translation_multiplies_the_spectrum_by_a_phase(self):
        t = np.array([0.5, 1.0, 4.0])
        signal = SpectralSignal(2.0, [1.0, -0.5j])
        shifted = signal.shifted(1.5)

        self.assertEqual(shifted.translation, 1.5)
        self.assertEqual(shifted.decay_rate, 0.5 + 1.5j)
        np.testing.assert_allclose(shifted.spectrum(t), np.exp(-1.5j * t) * signal.spectrum(t), rtol=1e-13)
        self.assertEqual(shifted.norm_sq(), signal.norm_sq())

    def test_combination_adds_coefficients(self):
        signals = [SpectralSignal.basis_element(0, 1.0), SpectralSignal.basis_element(2, 1.0)]

        total = combination(signals, [2.0, 1j])

        np.testing.assert_array_equal(total.coefficients, [2.0, 0.0, 1j])
        self.assertEqual(total.norm_sq(), 5.0)

    def test_signals_over_different_bases_cannot_be_added(self):
        with self.assertRaises(ParameterDomainError):
            SpectralSignal(1.0, [1.0]) + SpectralSignal(2.0, [1.0])
        with self.assertRaises(ParameterDomainError):
            SpectralSignal(1.0, [1.0]) + SpectralSignal(1.0, [1.0]).shifted(1.0)

    def test_empty_combination_is_rejected(self):
        with self.assertRaises(ParameterDomainError):
            combination([], [])

    @genty_dataset(
        basis_alpha_at_minus_one=(-1.0, [1.0]),
        non_finite_coefficient=(0.0, [1.0, np.nan]),
    )
    def test_invalid_signals_are_rejected(self, basis_alpha, coefficients):
        with self.assertRaises(ParameterDomainError):
            SpectralSignal(basis_alpha, coefficients)

    def test_coefficients_are_read_only(self):
        signal = SpectralSignal(0.0, [1.0, 2.0])

        with self.assertRaises(ValueError):
            signal.coefficients[0] = 5.0

    def test_zero_signal(self):
        self.assertTrue(SpectralSignal(0.0, [0.0, 0.0]).is_zero())


@genty
class TestTimeScalePoint(BaseUnitTestCase):

    def test_point_maps_to_the_upper_half_plane(self):
        point = TimeScalePoint.from_halfplane(-1.5 + 2j)

        self.assertEqual((point.x, point.s), (-1.5, 2.0))
        self.assertEqual(point.z, -1.5 + 2j)

    @genty_dataset(
        zero_scale=(0.0, 0.0),
        negative_scale=(1.0, -1.0),
        infinite_scale=(1.0, float('inf')),
        nan_translation=(float('nan'), 1.0),
    )
    def test_invalid_points_are_rejected(self, x, s):
        with self.assertRaises(ParameterDomainError):
            TimeScalePoint(x, s)
