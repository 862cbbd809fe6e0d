"""
Run configurations: the parameters of one subcommand, merged from defaults, an experiment file and the command line.

An experiment file is a JSON (or YAML) mapping whose keys are the long flag names with underscores, for example

    {"n": 0, "alpha": 2, "a": 2.0, "b": 1.5, "m_schedule": [8, 16, 32], "out": "bounds.json"}

Flags given on the command line win over file values, which win over the defaults below.
"""
import math

import yaml

from app.util import log
from app.util.exceptions import ConfigurationError


# field types
INT = 'int'
FLOAT = 'float'
STR = 'str'
BOOL = 'bool'
FLOAT_LIST = 'float_list'
INT_LIST = 'int_list'
STR_LIST = 'str_list'
COMPLEX_LIST = 'complex_list'
PAIR_LIST = 'pair_list'

REQUIRED = object()

EVAL_FAMILIES = ('S', 'S-disc', 'laguerre', 'laguerre-fn', 'circular-jacobi', 'paul')
WINDOWS = ('laguerre', 'paul')

_ORDER_FIELDS = {
    'n': (INT, 0),
    'alpha': (FLOAT, 2.0),
}
_LATTICE_FIELDS = {
    'a': (FLOAT, REQUIRED),
    'b': (FLOAT, REQUIRED),
    'jmin': (INT, -4),
    'jmax': (INT, 4),
    'kmin': (INT, -8),
    'kmax': (INT, 8),
}
_COMMON_FIELDS = {
    'quad_order': (INT, None),
    'out': (STR, None),
}

COMMAND_FIELDS = {
    'eval': dict(_COMMON_FIELDS, **{
        'family': (STR, REQUIRED),
        'n': (INT, 0),
        'alpha': (FLOAT, 0.0),
        't': (FLOAT_LIST, None),
        'x': (FLOAT_LIST, None),
        't_min': (FLOAT, -20.0),
        't_max': (FLOAT, 20.0),
        'points': (INT, 401),
        'z_re': (FLOAT_LIST, None),
        'z_im': (FLOAT_LIST, None),
        'format': (STR, 'csv'),
    }),
    'lattice': dict(_COMMON_FIELDS, **dict(_ORDER_FIELDS, **dict(_LATTICE_FIELDS, **{
        'radius': (FLOAT, None),
        'no_extend': (BOOL, False),
        'summary_out': (STR, None),
        'format': (STR, 'csv'),
    }))),
    'transform': dict(_COMMON_FIELDS, **dict(_ORDER_FIELDS, **{
        'coefficients': (COMPLEX_LIST, [1.0]),
        'basis_alpha': (FLOAT, None),
        'window': (STR, 'laguerre'),
        'x_min': (FLOAT, -10.0),
        'x_max': (FLOAT, 10.0),
        'nx': (INT, 41),
        's_min': (FLOAT, 0.1),
        's_max': (FLOAT, 10.0),
        'ns': (INT, 21),
        'format': (STR, 'csv'),
    })),
    'framebounds': dict(_COMMON_FIELDS, **dict(_ORDER_FIELDS, **dict(_LATTICE_FIELDS, **{
        'a': (FLOAT, None),
        'b': (FLOAT, None),
        'point': (PAIR_LIST, None),
        'basis_size': (INT, 16),
        'basis_alpha': (FLOAT, None),
        'm_schedule': (INT_LIST, None),
        'window': (STR, 'laguerre'),
        'no_extend': (BOOL, False),
        'format': (STR, 'json'),
    }))),
    'sweep': dict(_COMMON_FIELDS, **dict(_ORDER_FIELDS, **{
        'pair': (PAIR_LIST, REQUIRED),
        'jmin': (INT, -4),
        'jmax': (INT, 4),
        'kmin': (INT, -8),
        'kmax': (INT, 8),
        'basis_alpha': (FLOAT, None),
        'm_schedule': (INT_LIST, [8, 16, 32]),
        'no_extend': (BOOL, False),
        'format': (STR, 'csv'),
    })),
    'verify': {
        'only': (STR_LIST, None),
        'tolerance': (FLOAT, None),
        'out': (STR, None),
        'format': (STR, 'json'),
    },
}


class RunConfig(object):
    """
    The validated parameter record of one subcommand run. Values are read with item access:
    >>> run_config['alpha']
    """

    def __init__(self, command, values):
        """
        :type command: str
        :type values: dict
        """
        self._command = command
        self._values = dict(values)

    @property
    def command(self):
        return self._command

    def __getitem__(self, key):
        return self._values[key]

    def __contains__(self, key):
        return key in self._values

    def to_dict(self):
        return dict(self._values)

    @classmethod
    def from_sources(cls, command, flag_values=None, config_path=None):
        """
        Merge defaults, the experiment file and the flags, then validate.

        :param command: the subcommand name
        :type command: str
        :param flag_values: the values given on the command line; absent flags must be absent from the dict
        :type flag_values: dict | None
        :param config_path: path of a JSON or YAML experiment file
        :type config_path: str | None
        :rtype: RunConfig
        """
        if command not in COMMAND_FIELDS:
            raise ConfigurationError('Unknown command "{}".'.format(command))
        fields = COMMAND_FIELDS[command]
        file_values = load_config_file(config_path) if config_path else {}

        values = {}
        for key, (field_type, default) in fields.items():
            source = 'default'
            value = default
            if key in file_values:
                value, source = file_values[key], 'config file'
            if flag_values and flag_values.get(key) is not None:
                value, source = flag_values[key], 'command line'
            if value is REQUIRED:
                raise ConfigurationError('The {} command needs a value for "{}" (flag --{}).'
                                         .format(command, key, key.replace('_', '-')))
            values[key] = _cast(key, value, field_type, source)

        unknown_keys = sorted(set(file_values) - set(fields))
        if unknown_keys:
            raise ConfigurationError('The config file {} contains keys the {} command does not accept: {}'
                                     .format(config_path, command, ', '.join(unknown_keys)))

        _validate_choices(command, values)
        log.get_logger(__name__).debug('Run configuration for {}: {}', command, values)
        return cls(command, values)


def load_config_file(config_path):
    """
    :type config_path: str
    :rtype: dict
    """
    try:
        with open(config_path, encoding='utf-8') as config_file:
            contents = yaml.safe_load(config_file)
    except OSError as ex:
        raise ConfigurationError('The config file {} could not be read: {}'.format(config_path, ex))
    except yaml.YAMLError as ex:
        raise ConfigurationError('The config file {} could not be parsed: {}'.format(config_path, ex))
    if contents is None:
        return {}
    if not isinstance(contents, dict):
        raise ConfigurationError('The config file {} must contain a mapping of parameter names to values.'
                                 .format(config_path))
    return {str(key).replace('-', '_'): value for key, value in contents.items()}


def _type_error(key, field_type, value, source):
    return ConfigurationError('The value {!r} for "{}" from the {} is not a valid {}.'
                              .format(value, key, source, field_type.replace('_', ' ')))


def _cast(key, value, field_type, source):
    if value is None:
        return None
    try:
        return _CASTS[field_type](value)
    except (TypeError, ValueError):
        raise _type_error(key, field_type, value, source)


def _cast_int(value):
    if isinstance(value, bool):
        raise TypeError(value)
    if isinstance(value, float):
        if not value.is_integer():
            raise ValueError(value)
        return int(value)
    return int(value)


def _cast_float(value):
    if isinstance(value, bool):
        raise TypeError(value)
    return float(value)


def _cast_str(value):
    if not isinstance(value, str):
        raise TypeError(value)
    return value


def _cast_bool(value):
    if not isinstance(value, bool):
        raise TypeError(value)
    return value


def _split(value):
    """
    A list field accepts a list, a single value, or a comma separated string.
    """
    if isinstance(value, str):
        return [item.strip() for item in value.split(',') if item.strip()]
    if isinstance(value, (list, tuple)):
        items = []
        for item in value:
            items.extend(_split(item) if isinstance(item, str) else [item])
        return items
    return [value]


def _cast_complex(value):
    if isinstance(value, bool):
        raise TypeError(value)
    if isinstance(value, str):
        return complex(value.replace(' ', '').replace('i', 'j'))
    return complex(value)


def _cast_pair(value):
    """
    "a:b" strings or two-element lists. A pair that cannot be read becomes (nan, nan), so that commands that keep
    going past bad rows can report it.
    """
    try:
        if isinstance(value, str):
            first, second = value.split(':')
        else:
            first, second = value
        return float(first), float(second)
    except (TypeError, ValueError):
        log.get_logger(__name__).warning('Could not read the pair {!r}; it is kept as (nan, nan).', value)
        return math.nan, math.nan


def _cast_pairs(value):
    if isinstance(value, str):
        value = [value]
    if not isinstance(value, (list, tuple)):
        raise TypeError(value)
    if len(value) == 2 and all(isinstance(item, (int, float)) and not isinstance(item, bool) for item in value):
        value = [value]  # a single [a, b] pair
    return [_cast_pair(item) for item in value]


_CASTS = {
    INT: _cast_int,
    FLOAT: _cast_float,
    STR: _cast_str,
    BOOL: _cast_bool,
    FLOAT_LIST: lambda value: [_cast_float(float(item) if isinstance(item, str) else item) for item in _split(value)],
    INT_LIST: lambda value: [_cast_int(int(item) if isinstance(item, str) else item) for item in _split(value)],
    STR_LIST: lambda value: [_cast_str(item) for item in _split(value)],
    COMPLEX_LIST: lambda value: [_cast_complex(item) for item in _split(value)],
    PAIR_LIST: _cast_pairs,
}


def _validate_choices(command, values):
    if values.get('format') not in (None, 'csv', 'json'):
        raise ConfigurationError('The output format must be csv or json (got "{}").'.format(values['format']))
    if command == 'eval' and values['family'] not in EVAL_FAMILIES:
        raise ConfigurationError('Unknown function family "{}"; expected one of {}.'
                                 .format(values['family'], ', '.join(EVAL_FAMILIES)))
    if values.get('window') not in (None,) + WINDOWS:
        raise ConfigurationError('Unknown window "{}"; expected laguerre or paul.'.format(values['window']))
    if values.get('quad_order') is not None and values['quad_order'] < 1:
        raise ConfigurationError('The quadrature order must be a positive integer (got {}).'
                                 .format(values['quad_order']))
    if values.get('m_schedule') is not None and not values['m_schedule']:
        raise ConfigurationError('The M schedule must list at least one basis size.')
