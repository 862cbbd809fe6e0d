from app.subcommands.verify_subcommand import format_table
from app.verification.invariant_suites import Check, SuiteResult
from test.framework.base_unit_test_case import BaseUnitTestCase


class TestVerifySubcommand(BaseUnitTestCase):

    def test_format_table_marks_each_suite(self):
        results = [
            SuiteResult('laguerre', [Check('gram', 1e-12)], 1e-8, runtime=0.5),
            SuiteResult('density', [Check('formula', 0.25)], 0.1, runtime=12.25),
        ]

        lines = format_table(results).splitlines()

        self.assertEqual(len(lines), 3)
        self.assertEqual(lines[0].split(), ['suite', 'status', 'measured', 'tolerance', 'seconds'])
        self.assertEqual(lines[1].split(), ['laguerre', 'PASS', '1e-12', '1e-08', '0.50'])
        self.assertEqual(lines[2].split(), ['density', 'FAIL', '0.25', '0.1', '12.25'])

    def test_format_table_without_results_is_only_the_header(self):
        self.assertEqual(len(format_table([]).splitlines()), 1)
