import csv
import io
import json
import math
from unittest.mock import ANY, mock_open

from genty import genty, genty_dataset

from app.geometry.density import DensityEstimate
from app.geometry.point_sequence import HyperbolicLattice
from app.util.conf.configuration import Configuration
import main
from test.framework.base_unit_test_case import BaseUnitTestCase
from test.framework.comparators import NumberCloseTo


@genty
class TestMain(BaseUnitTestCase):

    def setUp(self):
        super().setUp()
        self.write_file_mock = self.patch('app.util.fs.write_file', allow_repatch=True)
        # Keep a developer's ~/.lwframes/lwframes.conf out of the tests.
        self.patch('app.util.conf.base_config_loader.os.path.isfile').return_value = False
        self.patch('argparse._sys.stderr')  # Hack to prevent argparse from printing output during tests.

    def _written_text(self, call_index=0):
        return self.write_file_mock.call_args_list[call_index][0][0]

    def _written_rows(self, call_index=0):
        rows = list(csv.reader(io.StringIO(self._written_text(call_index))))
        return rows[0], [[float(cell) for cell in row] for row in rows[1:]]

    def _assert_exits_with(self, args, expected_code):
        with self.assertRaises(SystemExit) as context:
            main.main(args)
        self.assertEqual(context.exception.code, expected_code)

    def test_eval_s_at_the_origin(self):
        main.main(['eval', '--family', 'S', '--n', '0', '--alpha', '0', '--t', '0', '-o', 'values.csv'])

        header, rows = self._written_rows()
        self.assertEqual(header, ['t', 're', 'im'])
        self.assertEqual(len(rows), 1)
        self.assertAlmostEqual(rows[0][1], 2.0, places=12)
        self.assertAlmostEqual(rows[0][2], 0.0, places=12)
        self.assertEqual(self.write_file_mock.call_args[0][1], 'values.csv')

    def test_eval_laguerre_polynomial(self):
        main.main(['eval', '--family', 'laguerre', '--n', '1', '--alpha', '0', '--x', '0', '--x', '1', '--x', '3',
                   '-o', 'values.csv'])

        header, rows = self._written_rows()
        self.assertEqual(header, ['x', 'value'])
        for (x, value), expected in zip(rows, [1.0, 0.0, -2.0]):
            self.assertAlmostEqual(value, expected, places=12, msg='L_1^0({})'.format(x))

    def test_eval_circular_jacobi(self):
        main.main(['eval', '--family', 'circular-jacobi', '--n', '1', '--alpha', '2', '--z-re', '0.5', '--z-im', '0',
                   '--z-re', '0', '--z-im', '0.5', '-o', 'values.csv'])

        header, rows = self._written_rows()
        self.assertEqual(header, ['z_re', 'z_im', 're', 'im'])
        # g_1(z) = 1 + 2z for alpha = 2
        self.assertAlmostEqual(rows[0][2], 2.0, places=12)
        self.assertAlmostEqual(rows[1][2], 1.0, places=12)
        self.assertAlmostEqual(rows[1][3], 1.0, places=12)

    def test_eval_grid_in_json(self):
        main.main(['eval', '--family', 'paul', '--alpha', '1', '--t-min', '-1', '--t-max', '1', '--points', '5',
                   '--format', 'json', '-o', 'paul.json'])

        document = json.loads(self._written_text())
        self.assertEqual(document['family'], 'paul')
        self.assertEqual([row['t'] for row in document['rows']], [-1.0, -0.5, 0.0, 0.5, 1.0])

    @genty_dataset(
        missing_family=(['eval', '--t', '0'], 2),
        unknown_family_flag=(['eval', '--family', 'bessel'], 2),
        circle_without_points=(['eval', '--family', 'circular-jacobi', '--n', '1'], 2),
        domain_error=(['eval', '--family', 'S', '--alpha', '-1', '--t', '0'], 2),
        abbreviated_flag=(['eval', '--fam', 'S'], 2),
        framebounds_without_atoms=(['framebounds'], 2),
        no_command=([], 2),
    )
    def test_invalid_input_exits_with_code_2(self, args, expected_code):
        self._assert_exits_with(args, expected_code)

    def test_lattice_summary_in_json(self):
        lattice_density_mock = self.patch('app.subcommands.lattice_subcommand.lattice_density')
        lattice_density_mock.return_value = DensityEstimate(0.97, 0.99, 4, theoretical_density=1.0)

        main.main(['lattice', '--a', str(math.exp(2 * math.pi)), '--b', '1', '--jmin', '0', '--jmax', '0',
                   '--kmin', '-1', '--kmax', '1', '--format', 'json', '-o', 'lattice.json'])

        document = json.loads(self._written_text())
        self.assertAlmostEqual(document['theoretical_density'], 1.0, places=12)
        self.assertEqual(document['density_estimate'], 0.97)
        self.assertEqual(document['point_count'], 3)
        self.assertEqual([(point['j'], point['k']) for point in document['points']], [(0, -1), (0, 0), (0, 1)])
        self.assertAlmostEqual(document['points'][1]['im_u'], 1.0)
        self.assertAlmostEqual(document['points'][1]['re_d'], 0.0)

        lattice_density_mock.assert_called_once_with(
            ANY, NumberCloseTo(0.99), extend=True, tolerance=NumberCloseTo(1e-6), max_rounds=8, worker_pool=ANY)
        self.assertIsInstance(lattice_density_mock.call_args[0][0], HyperbolicLattice)

    def test_empty_lattice_writes_an_empty_table_and_a_zero_density_summary(self):
        main.main(['lattice', '--a', '2', '--b', '1', '--jmin', '1', '--jmax', '0', '-o', 'lattice.csv',
                   '--summary-out', 'summary.json'])

        self.assertEqual(self._written_text(0), 'j,k,re_u,im_u,re_d,im_d\n')
        summary = json.loads(self._written_text(1))
        self.assertEqual(summary['density_estimate'], 0.0)
        self.assertIsNone(summary['separated'])

    def test_lattice_with_invalid_dilation_exits_with_code_2(self):
        self._assert_exits_with(['lattice', '--a', '1', '--b', '1'], 2)

    def test_transform_table_is_scale_major(self):
        main.main(['transform', '--n', '0', '--alpha', '2', '--coefficients', '1', '--x-min', '-1', '--x-max', '1',
                   '--nx', '3', '--s-min', '1', '--s-max', '4', '--ns', '2', '-o', 'transform.csv'])

        header, rows = self._written_rows()
        self.assertEqual(header, ['x', 's', 're', 'im'])
        self.assertEqual([row[0] for row in rows], [-1.0, 0.0, 1.0] * 2)
        self.assertEqual([row[1] for row in rows[:3]], [1.0] * 3)
        self.assertAlmostEqual(rows[3][1], 4.0, places=12)

    def test_framebounds_for_explicit_points(self):
        main.main(['framebounds', '--n', '0', '--alpha', '2', '--point', '0:1', '--point', '1:2', '--basis-size', '2',
                   '--format', 'csv', '-o', 'bounds.csv'])

        header, rows = self._written_rows()
        self.assertEqual(header, ['M', 'a_est', 'b_est'])
        self.assertEqual(len(rows), 1)
        self.assertEqual(rows[0][0], 2)
        self.assertLessEqual(rows[0][1], rows[0][2])

    def test_sweep_keeps_going_past_a_failed_lattice(self):
        main.main(['sweep', '--pair', '0.5:1', '--m-schedule', '8,16', '-o', 'sweep.csv'])

        lines = self._written_text().splitlines()
        self.assertEqual(lines[0], 'blog_a,density_est,threshold,inside,M,a_est,b_est')
        self.assertEqual(len(lines), 3)
        self.assertTrue(all(',failed,' in line for line in lines[1:]))

    def test_experiment_file_values_are_used_and_flags_win(self):
        experiment = '{"family": "laguerre", "n": 1, "alpha": 5, "x": [0]}'
        self.patch('app.util.run_config.open', new=mock_open(read_data=experiment), create=True)

        main.main(['eval', '--config', 'experiment.json', '--alpha', '0', '-o', 'values.csv'])

        _, rows = self._written_rows()
        self.assertAlmostEqual(rows[0][1], 1.0, places=12, msg='L_1^0(0) = 1 with the flag value of alpha')

    def test_verify_writes_results_and_passes(self):
        main.main(['verify', '--only', 'laguerre', '-o', 'verify.json'])

        document = json.loads(self._written_text())
        self.assertTrue(document['passed'])
        self.assertEqual([suite['suite'] for suite in document['suites']], ['laguerre'])
        self.assertEqual(Configuration['log_level'], 'INFO')

    def test_failing_verify_writes_results_then_exits_with_code_1(self):
        self._assert_exits_with(['verify', '--only', 'laguerre', '--tolerance', '0', '-o', 'verify.json'], 1)

        document = json.loads(self._written_text())
        self.assertFalse(document['passed'])

    def test_verify_rejects_unknown_suites(self):
        self._assert_exits_with(['verify', '--only', 'reflection'], 2)
