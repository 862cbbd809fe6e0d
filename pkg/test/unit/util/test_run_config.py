import math
from unittest.mock import mock_open

from genty import genty, genty_dataset

from app.util.exceptions import ConfigurationError
from app.util.run_config import COMMAND_FIELDS, RunConfig, load_config_file
from test.framework.base_unit_test_case import BaseUnitTestCase


@genty
class TestRunConfig(BaseUnitTestCase):

    def _patch_config_file(self, contents):
        self.patch('app.util.run_config.open', new=mock_open(read_data=contents), create=True)

    def test_defaults_fill_absent_flags(self):
        run_config = RunConfig.from_sources('transform', {})

        self.assertEqual(run_config['n'], 0)
        self.assertEqual(run_config['alpha'], 2.0)
        self.assertEqual(run_config['coefficients'], [1.0])
        self.assertIsNone(run_config['basis_alpha'])
        self.assertEqual(run_config['format'], 'csv')
        self.assertEqual(set(run_config.to_dict()), set(COMMAND_FIELDS['transform']))

    def test_flags_win_over_file_values_which_win_over_defaults(self):
        self._patch_config_file('{"n": 2, "alpha": 3, "a": 2.0, "b": 1.5, "jmin": -2}')

        run_config = RunConfig.from_sources('lattice', {'alpha': 4.0}, 'experiment.json')

        self.assertEqual(run_config['n'], 2)
        self.assertEqual(run_config['alpha'], 4.0)
        self.assertEqual(run_config['jmin'], -2)
        self.assertEqual(run_config['jmax'], 4)

    def test_yaml_files_are_accepted(self):
        self._patch_config_file('pair:\n  - "2:1"\n  - [3, 0.5]\nm_schedule: 8,16\n')

        run_config = RunConfig.from_sources('sweep', {}, 'sweep.yaml')

        self.assertEqual(run_config['pair'], [(2.0, 1.0), (3.0, 0.5)])
        self.assertEqual(run_config['m_schedule'], [8, 16])

    def test_dashed_file_keys_are_read_as_underscores(self):
        self._patch_config_file('{"a": 2, "b": 1, "summary-out": "summary.json"}')

        run_config = RunConfig.from_sources('lattice', {}, 'experiment.json')

        self.assertEqual(run_config['summary_out'], 'summary.json')

    def test_missing_required_value_raises(self):
        with self.assertRaisesRegex(ConfigurationError, '--family'):
            RunConfig.from_sources('eval', {})

    def test_unknown_file_keys_raise(self):
        self._patch_config_file('{"family": "S", "temperature": 300}')

        with self.assertRaisesRegex(ConfigurationError, 'temperature'):
            RunConfig.from_sources('eval', {}, 'experiment.json')

    @genty_dataset(
        bool_for_int=('eval', {'family': 'S', 'n': True}),
        fractional_int=('eval', {'family': 'S', 'n': 1.5}),
        text_for_float=('eval', {'family': 'S', 'alpha': 'two'}),
        number_for_str=('eval', {'family': 7}),
        unknown_family=('eval', {'family': 'bessel'}),
        unknown_window=('transform', {'window': 'morlet'}),
        unknown_format=('verify', {'format': 'xml'}),
        zero_quadrature_order=('transform', {'quad_order': 0}),
        empty_schedule=('sweep', {'pair': ['2:1'], 'm_schedule': ''}),
        int_for_bool=('lattice', {'a': 2.0, 'b': 1.0, 'no_extend': 1}),
    )
    def test_invalid_values_raise(self, command, flag_values):
        with self.assertRaises(ConfigurationError):
            RunConfig.from_sources(command, flag_values)

    def test_unknown_command_raises(self):
        with self.assertRaises(ConfigurationError):
            RunConfig.from_sources('deploy', {})

    def test_integral_floats_are_accepted_as_ints(self):
        run_config = RunConfig.from_sources('eval', {'family': 'laguerre', 'n': 3.0})

        self.assertEqual(run_config['n'], 3)
        self.assertIsInstance(run_config['n'], int)

    @genty_dataset(
        comma_string=('1,0.5,0+1j', [1, 0.5, 1j]),
        i_suffix=(['1', '2 - 3i'], [1, 2 - 3j]),
        numbers=([1, 0.25], [1, 0.25]),
    )
    def test_complex_lists(self, coefficients, expected):
        run_config = RunConfig.from_sources('transform', {'coefficients': coefficients})

        self.assertEqual(run_config['coefficients'], expected)

    def test_unreadable_pairs_become_nan(self):
        run_config = RunConfig.from_sources('sweep', {'pair': ['2:1', 'two:one', '1:2:3']})

        pairs = run_config['pair']
        self.assertEqual(pairs[0], (2.0, 1.0))
        for pair in pairs[1:]:
            self.assertTrue(math.isnan(pair[0]) and math.isnan(pair[1]))
        self.assertTrue(self.log_handler.has_warning("Could not read the pair 'two:one'; it is kept as (nan, nan)."))

    def test_single_numeric_pair(self):
        run_config = RunConfig.from_sources('framebounds', {'point': [0.5, 2]})

        self.assertEqual(run_config['point'], [(0.5, 2.0)])

    def test_empty_file_means_no_values(self):
        self._patch_config_file('')

        self.assertEqual(load_config_file('empty.yaml'), {})

    @genty_dataset(
        list_document=('[1, 2, 3]',),
        broken_yaml=('{"n": [1, 2',),
    )
    def test_malformed_files_raise(self, contents):
        self._patch_config_file(contents)

        with self.assertRaises(ConfigurationError):
            load_config_file('broken.json')

    def test_unreadable_file_raises(self):
        self.patch('app.util.run_config.open', new=mock_open(), create=True).side_effect = FileNotFoundError

        with self.assertRaises(ConfigurationError):
            load_config_file('missing.json')
