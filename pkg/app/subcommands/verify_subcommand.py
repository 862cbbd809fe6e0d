from app.subcommands.subcommand import Subcommand
from app.util.conf.configuration import Configuration
from app.util.exceptions import InvariantFailure
from app.util.tabular_output import format_float
from app.verification.invariant_suites import run_suites


VERIFY_HEADER = ['suite', 'passed', 'measured', 'tolerance', 'runtime_seconds']


class VerifySubcommand(Subcommand):
    """
    Run the invariant suites, log a pass/fail table and write the full results. Any failing suite turns into an
    InvariantFailure after the results are written.
    """
    command_name = 'verify'

    def execute(self, run_config, output, worker_pool):
        tolerance = run_config['tolerance']
        if tolerance is None:
            tolerance = Configuration['verify_tolerance']
        results = run_suites(run_config['only'], tolerance, worker_pool)

        self._logger.info('\n{}', format_table(results))
        rows = [[result.name, result.passed, result.measured, result.tolerance, result.runtime] for result in results]
        document = {
            'passed': all(result.passed for result in results),
            'suites': [result.to_dict() for result in results],
        }
        output.write(run_config['format'], VERIFY_HEADER, rows, document)

        failed = [result.name for result in results if not result.passed]
        if failed:
            raise InvariantFailure('{} of {} suites failed: {}'.format(len(failed), len(results), ', '.join(failed)))


def format_table(results):
    """
    :type results: list[app.verification.invariant_suites.SuiteResult]
    :rtype: str
    """
    lines = ['{:<12} {:<6} {:>12} {:>12} {:>9}'.format('suite', 'status', 'measured', 'tolerance', 'seconds')]
    for result in results:
        lines.append('{:<12} {:<6} {:>12} {:>12} {:>9.2f}'.format(
            result.name, 'PASS' if result.passed else 'FAIL', format_float(result.measured, 4),
            format_float(result.tolerance, 4), result.runtime))
    return '\n'.join(lines)
