import io
import tokenize
from unittest.mock import MagicMock, call

from test.framework.base_unit_test_case import BaseUnitTestCase
from test.framework.pylint import LwframesTokenChecker, register


class TestLintChecker(BaseUnitTestCase):

    def setUp(self):
        super().setUp()
        self.mock_add_message = self.patch('test.framework.pylint.lwframes_token_checker.LwframesTokenChecker'
                                           '.add_message')

    def _process(self, source):
        checker = LwframesTokenChecker(MagicMock())
        checker.process_tokens(tokenize.generate_tokens(io.StringIO(source).readline))
        return checker

    def test_generated_version_line_is_reported(self):
        checker = self._process('x = 1\nversion = "1.0.3"  # DO NOT COMMIT\n')

        self.assertEqual(self.mock_add_message.call_args_list, [call(checker, 'lwframes-do-not-commit', line=2)])

    def test_string_literals_are_not_comments(self):
        self._process('message = "DO NOT COMMIT"  # a plain comment\n')

        self.assertFalse(self.mock_add_message.called)

    def test_register_adds_the_checker(self):
        linter = MagicMock()

        register(linter)

        registered_checker = linter.register_checker.call_args[0][0]
        self.assertIsInstance(registered_checker, LwframesTokenChecker)
