#!/usr/bin/env python

import sys

from app.subcommands.eval_subcommand import EvalSubcommand
from app.subcommands.framebounds_subcommand import FrameboundsSubcommand
from app.subcommands.lattice_subcommand import LatticeSubcommand
from app.subcommands.sweep_subcommand import SweepSubcommand
from app.subcommands.transform_subcommand import TransformSubcommand
from app.subcommands.verify_subcommand import VerifySubcommand
from app.util import autoversioning
from app.util.argument_parsing import (LwframesArgumentParser, LwframesHelpFormatter, add_common_arguments,
                                       add_lattice_arguments, add_order_arguments, add_output_arguments,
                                       add_quadrature_argument, add_run_argument)
from app.util.conf.base_config_loader import BaseConfigLoader
from app.util.conf.configuration import Configuration
from app.util.conf.verify_config_loader import VerifyConfigLoader
from app.util.run_config import EVAL_FAMILIES, WINDOWS
from app.util.unhandled_exception_handler import UnhandledExceptionHandler
from app.verification.invariant_suites import DEFAULT_SUITES, OPTIONAL_SUITES


def _parse_args(args):
    parser = LwframesArgumentParser(
        description='Laguerre wavelet frames: special functions, hyperbolic lattices and frame bound estimates.')
    parser.add_argument(
        '-V', '--version',
        action='version', version='lwframes ' + autoversioning.get_version())

    subparsers = parser.add_subparsers(
        title='Commands',
        description='See "{} <command> --help" for more info on a specific command.'.format(sys.argv[0]),
        dest='subcommand',
    )
    subparsers.required = True

    eval_parser = subparsers.add_parser(
        'eval', help='Tabulate a special function on a grid.', formatter_class=LwframesHelpFormatter)
    add_run_argument(eval_parser, '--family', choices=EVAL_FAMILIES, help='the function to evaluate')
    add_order_arguments(eval_parser)
    add_run_argument(eval_parser, '--t', type=float, action='append', help='an evaluation point (repeatable)')
    add_run_argument(eval_parser, '--x', type=float, action='append', help='an evaluation point (repeatable)')
    add_run_argument(eval_parser, '--t-min', type=float, help='start of the evaluation grid')
    add_run_argument(eval_parser, '--t-max', type=float, help='end of the evaluation grid')
    add_run_argument(eval_parser, '--points', type=int, help='number of grid points')
    add_run_argument(eval_parser, '--z-re', type=float, action='append',
                     help='real part of a disc point for circular-jacobi (repeatable)')
    add_run_argument(eval_parser, '--z-im', type=float, action='append',
                     help='imaginary part of a disc point for circular-jacobi (repeatable)')
    eval_parser.set_defaults(subcommand_class=EvalSubcommand)

    lattice_parser = subparsers.add_parser(
        'lattice', help='Generate a hyperbolic lattice and estimate its density.',
        formatter_class=LwframesHelpFormatter)
    add_order_arguments(lattice_parser)
    add_lattice_arguments(lattice_parser)
    add_run_argument(lattice_parser, '--radius', type=float, help='pseudohyperbolic radius r of the density balls')
    add_run_argument(lattice_parser, '--no-extend', action='store_true',
                     help='use the given ranges as they are and fail if they do not cover the density balls')
    add_run_argument(lattice_parser, '--summary-out', help='file for the JSON summary when writing CSV')
    lattice_parser.set_defaults(subcommand_class=LatticeSubcommand)

    transform_parser = subparsers.add_parser(
        'transform', help='Tabulate the wavelet transform of a signal on an x-by-s grid.',
        formatter_class=LwframesHelpFormatter)
    add_order_arguments(transform_parser)
    add_run_argument(transform_parser, '--coefficients',
                     help='comma separated Laguerre-basis coefficients of the signal, e.g. 1,0.5,0+1j')
    add_run_argument(transform_parser, '--basis-alpha', type=float, help='parameter of the signal basis')
    add_run_argument(transform_parser, '--window', choices=WINDOWS, help='analysing window')
    add_run_argument(transform_parser, '--x-min', type=float, help='smallest translation')
    add_run_argument(transform_parser, '--x-max', type=float, help='largest translation')
    add_run_argument(transform_parser, '--nx', type=int, help='number of translations')
    add_run_argument(transform_parser, '--s-min', type=float, help='smallest scale')
    add_run_argument(transform_parser, '--s-max', type=float, help='largest scale')
    add_run_argument(transform_parser, '--ns', type=int, help='number of scales')
    transform_parser.set_defaults(subcommand_class=TransformSubcommand)

    framebounds_parser = subparsers.add_parser(
        'framebounds', help='Estimate frame bounds on the leading Laguerre subspaces.',
        formatter_class=LwframesHelpFormatter)
    add_order_arguments(framebounds_parser)
    add_lattice_arguments(framebounds_parser)
    add_run_argument(framebounds_parser, '--point', action='append',
                     help='an explicit atom location x:s instead of a lattice (repeatable)')
    add_run_argument(framebounds_parser, '--basis-size', type=int, help='dimension M of the test subspace')
    add_run_argument(framebounds_parser, '--basis-alpha', type=float, help='parameter of the test basis')
    add_run_argument(framebounds_parser, '--m-schedule', help='comma separated basis sizes to report, e.g. 8,16,32')
    add_run_argument(framebounds_parser, '--window', choices=WINDOWS, help='analysing window')
    add_run_argument(framebounds_parser, '--no-extend', action='store_true',
                     help='use only the given lattice ranges')
    framebounds_parser.set_defaults(subcommand_class=FrameboundsSubcommand)

    sweep_parser = subparsers.add_parser(
        'sweep', help='Frame bounds across a list of lattices.', formatter_class=LwframesHelpFormatter)
    add_order_arguments(sweep_parser)
    add_run_argument(sweep_parser, '--pair', action='append', help='a lattice a:b (repeatable)')
    for flag in ('--jmin', '--jmax', '--kmin', '--kmax'):
        add_run_argument(sweep_parser, flag, type=int, help='lattice index range bound')
    add_run_argument(sweep_parser, '--basis-alpha', type=float, help='parameter of the test basis')
    add_run_argument(sweep_parser, '--m-schedule', help='comma separated basis sizes, e.g. 8,16,32')
    add_run_argument(sweep_parser, '--no-extend', action='store_true', help='use only the given lattice ranges')
    sweep_parser.set_defaults(subcommand_class=SweepSubcommand)

    verify_parser = subparsers.add_parser(
        'verify', help='Run the invariant suites.', formatter_class=LwframesHelpFormatter)
    add_run_argument(verify_parser, '--only', action='append', choices=DEFAULT_SUITES + OPTIONAL_SUITES,
                     help='run only this suite (repeatable)')
    add_run_argument(verify_parser, '--tolerance', type=float, help='override the tolerance of every suite')
    verify_parser.set_defaults(subcommand_class=VerifySubcommand)

    for subparser in (eval_parser, lattice_parser, transform_parser, framebounds_parser, sweep_parser):
        add_quadrature_argument(subparser)
    for subparser in (eval_parser, lattice_parser, transform_parser, framebounds_parser, sweep_parser, verify_parser):
        add_output_arguments(subparser)
        add_common_arguments(subparser)

    parsed_args = vars(parser.parse_args(args))  # vars() converts the namespace to a dict
    return parsed_args


def _initialize_configuration(app_subcommand, config_filename):
    """
    Load the default conf values (including subcommand-specific values), then find the conf file and read overrides.

    :param app_subcommand: The application subcommand (e.g., verify)
    :type app_subcommand: str
    :type config_filename: str | None
    """
    app_subcommand_conf_loaders = {
        'verify': VerifyConfigLoader(),
    }
    conf_loader = app_subcommand_conf_loaders.get(app_subcommand) or BaseConfigLoader()
    config = Configuration.singleton()

    conf_loader.configure_defaults(config)
    config_filename = config_filename or Configuration['config_file']
    conf_loader.load_from_config_file(config, config_filename)
    conf_loader.configure_postload(config)


def main(args):
    """
    This is the single entry point of the lwframes application. This function feeds the command line parameters as
    keyword args directly into the run() method of the appropriate Subcommand subclass.

    Exit codes: 0 on success, 1 when an invariant fails, 2 for invalid input and 3 when a coverage or convergence
    requirement is not met. Argument parsing errors exit with 2.
    """
    parsed_args = _parse_args(args)
    subcommand_class = parsed_args.pop('subcommand_class')  # defined in _parse_args() by subparser.set_defaults()

    unhandled_exception_handler = UnhandledExceptionHandler.singleton()
    with unhandled_exception_handler:
        _initialize_configuration(parsed_args.pop('subcommand'), parsed_args.pop('config_file'))
        subcommand_class().run(**parsed_args)


if __name__ == '__main__':
    main(sys.argv[1:])
