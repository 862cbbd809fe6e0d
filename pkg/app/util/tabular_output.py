"""
Writers for the CSV tables and JSON documents the subcommands produce. Every float goes through format_float, so two
runs with the same configuration produce byte-identical files.
"""
import csv
import io
import json
import math
import sys

import numpy as np

from app.util import fs, log
from app.util.exceptions import ConfigurationError


OUTPUT_FORMATS = ('csv', 'json')
DEFAULT_FLOAT_DIGITS = 17


def format_float(value, digits=DEFAULT_FLOAT_DIGITS):
    """
    :type value: float
    :type digits: int
    :rtype: str
    """
    value = float(value)
    if math.isnan(value):
        return 'nan'
    if math.isinf(value):
        return 'inf' if value > 0 else '-inf'
    if value == 0:
        value = 0.0  # -0.0 prints as 0
    return '{:.{}g}'.format(value, digits)


def format_cell(value, digits=DEFAULT_FLOAT_DIGITS):
    """
    :type value: int | float | str | bool | None
    :rtype: str
    """
    if value is None:
        return ''
    if isinstance(value, (bool, np.bool_)):
        return 'true' if value else 'false'
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return format_float(value, digits)
    return str(value)


def json_ready(value):
    """
    Recursively convert a result structure to plain JSON types: numpy scalars and arrays become Python values, complex
    numbers become {"re", "im"} objects, and non-finite floats become the strings "inf", "-inf" and "nan".

    :rtype: dict | list | str | int | float | bool | None
    """
    if isinstance(value, dict):
        return {str(key): json_ready(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [json_ready(item) for item in value]
    if isinstance(value, np.ndarray):
        return [json_ready(item) for item in value.tolist()]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (complex, np.complexfloating)):
        return {'re': json_ready(value.real), 'im': json_ready(value.imag)}
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if math.isnan(value):
            return 'nan'
        if math.isinf(value):
            return 'inf' if value > 0 else '-inf'
        return 0.0 if value == 0 else value
    return value


class TabularOutput(object):
    """
    Writes one data product to a file, or to stdout when no path is given. Console logs go to stderr, so stdout only
    ever carries the data.
    """

    def __init__(self, out_path=None, float_digits=DEFAULT_FLOAT_DIGITS):
        """
        :type out_path: str | None
        :type float_digits: int
        """
        self._logger = log.get_logger(__name__)
        self._out_path = out_path
        self._float_digits = float_digits

    def csv_text(self, header, rows):
        """
        :type header: list[str]
        :type rows: list[list]
        :rtype: str
        """
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator='\n')
        writer.writerow(header)
        for row in rows:
            if len(row) != len(header):
                raise ConfigurationError('A CSV row has {} cells but the header has {}.'.format(len(row), len(header)))
            writer.writerow([format_cell(cell, self._float_digits) for cell in row])
        return buffer.getvalue()

    @staticmethod
    def json_text(document):
        """
        :type document: dict | list
        :rtype: str
        """
        return json.dumps(json_ready(document), sort_keys=True, indent=2, allow_nan=False) + '\n'

    def write_csv(self, header, rows):
        self._write(self.csv_text(header, rows))

    def write_json(self, document):
        self._write(self.json_text(document))

    def write(self, output_format, header, rows, document):
        """
        Write the CSV table or the JSON document, whichever the format asks for.

        :type output_format: str
        """
        if output_format not in OUTPUT_FORMATS:
            raise ConfigurationError('Unknown output format "{}"; expected csv or json.'.format(output_format))
        if output_format == 'csv':
            self.write_csv(header, rows)
        else:
            self.write_json(document)

    def _write(self, text):
        if self._out_path:
            fs.write_file(text, self._out_path)
            self._logger.debug('Wrote {} characters to {}.', len(text), self._out_path)
        else:
            sys.stdout.write(text)
            sys.stdout.flush()
