import math
from unittest.mock import MagicMock

from genty import genty, genty_dataset
import numpy as np

from app.util.exceptions import ConfigurationError
from app.util.tabular_output import TabularOutput, format_cell, format_float, json_ready
from test.framework.base_unit_test_case import BaseUnitTestCase


@genty
class TestTabularOutput(BaseUnitTestCase):

    @genty_dataset(
        negative_zero=(-0.0, '0'),
        positive_zero=(0.0, '0'),
        integral=(2.0, '2'),
        round_trip=(0.1, '0.10000000000000001'),
        nan=(math.nan, 'nan'),
        positive_inf=(math.inf, 'inf'),
        negative_inf=(-math.inf, '-inf'),
    )
    def test_format_float(self, value, expected):
        self.assertEqual(format_float(value), expected)

    def test_format_float_with_fewer_digits(self):
        self.assertEqual(format_float(math.pi, 4), '3.142')

    @genty_dataset(
        none=(None, ''),
        true=(True, 'true'),
        numpy_false=(np.bool_(False), 'false'),
        numpy_int=(np.int64(12), '12'),
        numpy_float=(np.float64(-0.0), '0'),
        text=('inside', 'inside'),
    )
    def test_format_cell(self, value, expected):
        self.assertEqual(format_cell(value), expected)

    def test_json_ready_converts_numpy_complex_and_non_finite_values(self):
        document = {
            'values': np.array([1.5, -0.0]),
            'point': 1 - 2j,
            'bounds': (np.float64(math.inf), math.nan),
            'count': np.int32(3),
            1: 'key',
        }

        self.assertEqual(json_ready(document), {
            'values': [1.5, 0.0],
            'point': {'re': 1.0, 'im': -2.0},
            'bounds': ['inf', 'nan'],
            'count': 3,
            '1': 'key',
        })

    def test_csv_text(self):
        output = TabularOutput()

        text = output.csv_text(['x', 'value', 'inside'], [[0, -0.0, True], [1, math.nan, False]])

        self.assertEqual(text, 'x,value,inside\n0,0,true\n1,nan,false\n')

    def test_csv_row_width_must_match_the_header(self):
        with self.assertRaises(ConfigurationError):
            TabularOutput().csv_text(['x', 'y'], [[1.0]])

    def test_json_text_is_sorted_and_indented(self):
        text = TabularOutput.json_text({'b': 1, 'a': math.inf})

        self.assertEqual(text, '{\n  "a": "inf",\n  "b": 1\n}\n')

    def test_output_goes_to_the_given_file(self):
        write_file_mock = self.patch('app.util.fs.write_file', allow_repatch=True)

        TabularOutput('bounds.csv', float_digits=3).write('csv', ['M', 'a_est'], [[8, 2.0 / 3]], {})

        write_file_mock.assert_called_once_with('M,a_est\n8,0.667\n', 'bounds.csv')

    def test_output_goes_to_stdout_without_a_path(self):
        stdout_mock = self.patch('app.util.tabular_output.sys.stdout', new=MagicMock())

        TabularOutput().write('json', [], [], {'passed': True})

        stdout_mock.write.assert_called_once_with('{\n  "passed": true\n}\n')

    def test_unknown_format_raises(self):
        with self.assertRaises(ConfigurationError):
            TabularOutput().write('xml', [], [], {})
