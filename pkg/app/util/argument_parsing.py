import argparse


class LwframesArgumentParser(argparse.ArgumentParser):
    """
    An argument parser that lists required and optional arguments in separate help sections and never matches
    abbreviated long options.
    """
    def __init__(self, *args, **kwargs):
        # "help" is added by hand so that it lands in the "optional" group
        should_add_help = kwargs.pop('add_help', True)
        super().__init__(*args, add_help=False, **kwargs)

        self._required_arg_group = self.add_argument_group('required arguments')
        self._optional_arg_group = self.add_argument_group('optional arguments')
        if should_add_help:
            self._optional_arg_group.add_argument('-h', '--help', help='show this help message and exit', action='help')

    def add_argument(self, *args, **kwargs):
        """
        Add the argument to the required or the optional group instead of the parser itself.
        """
        is_required = kwargs.get('required', False)
        target_arg_group = self._required_arg_group if is_required else self._optional_arg_group
        return target_arg_group.add_argument(*args, **kwargs)

    def _get_option_tuples(self, option_string):
        """
        Disable prefix matching of long options. With prefix matching, a script that uses "--basis" for
        "--basis-size" breaks as soon as "--basis-alpha" is added.
        """
        chars = self.prefix_chars
        if option_string[0] in chars and option_string[1] in chars:
            return []

        return super()._get_option_tuples(option_string)


class LwframesHelpFormatter(argparse.HelpFormatter):
    def _get_help_string(self, action):
        """
        Appends the default argument value to the help string for non-required args that have default values.
        """
        help_string = action.help
        if not action.required:
            if action.default not in (argparse.SUPPRESS, None):
                defaulting_nargs = [argparse.OPTIONAL, argparse.ZERO_OR_MORE]
                if action.option_strings or action.nargs in defaulting_nargs:
                    # argparse expands old-style format strings
                    help_string += ' (default: %(default)s)'
        return help_string

    def _format_action_invocation(self, action):
        """
        Changes the default argument invocation string from, e.g.,:
            -o OUT, --out OUT
        to:
            -o/--out <OUT>
        """
        if action.option_strings:
            action_invocation_string = '/'.join(action.option_strings)
            if action.nargs != 0:
                default = self._get_default_metavar_for_optional(action)
                metavar_string = self._format_args(action, default)
                action_invocation_string = '{} {}'.format(action_invocation_string, metavar_string)
            return action_invocation_string

        return super()._format_action_invocation(action)

    def _get_default_metavar_for_optional(self, action):
        """
        Encloses metavars in angle brackets.
        """
        return '<{}>'.format(action.dest.upper())


def add_run_argument(parser, *flags, **kwargs):
    """
    Add a flag that can also come from an experiment file. The flag only shows up in the parsed arguments when it is
    given, so that file values are not masked by argparse defaults.

    :type parser: argparse.ArgumentParser
    """
    kwargs['default'] = argparse.SUPPRESS
    return parser.add_argument(*flags, **kwargs)


def add_order_arguments(parser):
    add_run_argument(parser, '--n', type=int, help='degree n of the wavelet S_n^alpha')
    add_run_argument(parser, '--alpha', type=float, help='parameter alpha of the wavelet')


def add_lattice_arguments(parser):
    add_run_argument(parser, '--a', type=float, help='dilation step a > 1 of the lattice (a^j, b k a^j)')
    add_run_argument(parser, '--b', type=float, help='translation step b > 0 of the lattice')
    add_run_argument(parser, '--jmin', type=int, help='smallest dilation index j')
    add_run_argument(parser, '--jmax', type=int, help='largest dilation index j')
    add_run_argument(parser, '--kmin', type=int, help='smallest translation index k')
    add_run_argument(parser, '--kmax', type=int, help='largest translation index k')


def add_quadrature_argument(parser):
    add_run_argument(parser, '--quad-order', type=int,
                     help='Gauss-Laguerre order; must cover the degree of the analysed polynomials')


def add_output_arguments(parser):
    add_run_argument(parser, '-o', '--out', help='file to write the result to, defaults to stdout')
    add_run_argument(parser, '--format', choices=['csv', 'json'], help='output format')


def add_common_arguments(parser):
    """
    Logging and configuration-file flags shared by every subcommand.
    """
    parser.add_argument(
        '-v', '--verbose',
        action='store_const', const='DEBUG', dest='log_level', help='set the log level to "debug"')
    parser.add_argument(
        '-q', '--quiet',
        action='store_const', const='ERROR', dest='log_level', help='set the log level to "error"')
    parser.add_argument(
        '--config',
        dest='run_config_file',
        help='JSON or YAML experiment file whose keys are the long flag names with underscores; flags win')
    parser.add_argument(
        '--config-file',
        help='the lwframes application config file, defaults to ~/.lwframes/lwframes.conf')
