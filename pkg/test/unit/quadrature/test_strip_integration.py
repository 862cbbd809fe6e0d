import math

from genty import genty, genty_dataset
import numpy as np

from app.quadrature.strip_integration import integrate_strip_2d, strip_grid
from app.util.exceptions import ParameterDomainError
from app.util.worker_pool import WorkerPool
from test.framework.base_unit_test_case import BaseUnitTestCase


@genty
class TestStripIntegration(BaseUnitTestCase):

    def test_grid_is_linear_in_x_and_geometric_in_scale(self):
        xs, scales = strip_grid((-1.0, 1.0), (0.1, 10.0), 5, 3)

        np.testing.assert_allclose(xs, [-1.0, -0.5, 0.0, 0.5, 1.0])
        np.testing.assert_allclose(scales, [0.1, 1.0, 10.0])

    @genty_dataset(
        empty_x_range=((1.0, 1.0), (0.1, 1.0), 5, 5),
        infinite_x_range=((-math.inf, 0.0), (0.1, 1.0), 5, 5),
        zero_scale=((-1.0, 1.0), (0.0, 1.0), 5, 5),
        reversed_scales=((-1.0, 1.0), (2.0, 1.0), 5, 5),
        single_x_node=((-1.0, 1.0), (0.1, 1.0), 1, 5),
        single_scale=((-1.0, 1.0), (0.1, 1.0), 5, 1),
    )
    def test_invalid_grids_are_rejected(self, x_range, s_range, nx, ns):
        with self.assertRaises(ParameterDomainError):
            strip_grid(x_range, s_range, nx, ns)

    def test_area_of_a_rectangle(self):
        area = integrate_strip_2d(lambda xs, s: np.ones_like(xs), (-1.0, 1.0), (1.0, math.e), 11, 401)

        self.assertAlmostEqual(area, 2 * (math.e - 1), delta=1e-5)

    def test_separable_integrand(self):
        # integral_{-1}^{1} x^2 dx * integral_1^2 ds / s^2 = 2/3 * 1/2
        value = integrate_strip_2d(lambda xs, s: xs ** 2 / s ** 2, (-1.0, 1.0), (1.0, 2.0), 2001, 2001)

        self.assertAlmostEqual(value, 1 / 3, delta=1e-6)

    def test_worker_pool_gives_identical_results(self):
        def integrand(xs, s):
            return np.exp(-xs ** 2 / s) * np.cos(xs * s)

        inline = integrate_strip_2d(integrand, (-3.0, 3.0), (0.5, 5.0), 101, 37)
        with WorkerPool(max_workers=3) as pool:
            pooled = integrate_strip_2d(integrand, (-3.0, 3.0), (0.5, 5.0), 101, 37, worker_pool=pool)

        self.assertEqual(inline, pooled)
