import math

from test.framework.functional.base_functional_test_case import BaseFunctionalTestCase


class TestCommandLine(BaseFunctionalTestCase):

    def test_verify_passes_for_the_orthogonality_suites(self):
        self.run_main(['verify', '--only', 'laguerre', '--only', 'circle', '-o', self.output_path('verify.json')])

        document = self.read_json('verify.json')
        self.assertTrue(document['passed'])
        self.assertEqual([suite['suite'] for suite in document['suites']], ['laguerre', 'circle'])

    def test_failing_verify_still_writes_its_results(self):
        self.run_main(['verify', '--only', 'laguerre', '--tolerance', '0', '-o', self.output_path('verify.json')],
                      expected_exit_code=1)

        self.assertFalse(self.read_json('verify.json')['passed'])

    def test_eval_writes_a_grid_of_laguerre_polynomials(self):
        self.run_main(['eval', '--family', 'laguerre', '--n', '2', '--alpha', '0', '--t-min', '0', '--t-max', '4',
                       '--points', '5', '-o', self.output_path('laguerre.csv')])

        header, rows = self.read_csv('laguerre.csv')
        self.assertEqual(header, ['x', 'value'])
        for x, value in rows:
            x = float(x)
            self.assertAlmostEqual(float(value), 1 - 2 * x + x * x / 2, places=10)

    def test_lattice_writes_points_and_a_summary(self):
        self.run_main(['lattice', '--a', '2', '--b', str(math.pi / math.log(2)), '--jmin', '-1', '--jmax', '1',
                       '--kmin', '-2', '--kmax', '2', '-o', self.output_path('lattice.csv'),
                       '--summary-out', self.output_path('summary.json')])

        header, rows = self.read_csv('lattice.csv')
        self.assertEqual(header, ['j', 'k', 're_u', 'im_u', 're_d', 'im_d'])
        self.assertEqual(len(rows), 15)
        for row in rows:
            self.assertLess(abs(complex(float(row[4]), float(row[5]))), 1)

        summary = self.read_json('summary.json')
        self.assertEqual(summary['point_count'], 15)
        self.assertAlmostEqual(summary['theoretical_density'], 2.0, places=10)
        self.assertTrue(summary['separated'])

    def test_invalid_lattice_exits_with_code_2(self):
        self.run_main(['lattice', '--a', '0.5', '--b', '1', '-o', self.output_path('lattice.csv')],
                      expected_exit_code=2)
