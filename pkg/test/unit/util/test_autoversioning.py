import subprocess
from unittest.mock import call

from genty import genty, genty_dataset

from app.util import autoversioning
from test.framework.base_unit_test_case import BaseUnitTestCase


@genty
class TestAutoversioning(BaseUnitTestCase):

    def setUp(self):
        super().setUp()
        self.unpatch('app.util.autoversioning.get_version')  # patched in BaseUnitTestCase for all other tests
        self.patch('app.util.autoversioning._MAJOR_MINOR_VERSION', new='1.0')
        self.check_output_mock = self.patch('app.util.autoversioning.subprocess.check_output')
        self.frozen_version_mock = self.patch('app.util.autoversioning._get_frozen_package_version')
        self.frozen_version_mock.return_value = None
        autoversioning._calculated_version = None  # reset cached version between individual tests

    def test_frozen_version_wins(self):
        self.frozen_version_mock.return_value = '1.2.3'

        self.assertEqual(autoversioning.get_version(), '1.2.3')
        self.assertFalse(self.check_output_mock.called, 'No git call is needed for a frozen version.')

    @genty_dataset(
        clean_checkout=(None, '1.0.3'),
        modified_checkout=(subprocess.CalledProcessError(1, 'git'), '1.0.3-mod'),
    )
    def test_source_version_counts_commits(self, diff_index_result, expected_version):
        def fake_git(command, **_):
            if command[1] == 'rev-list':
                return b'aaa\nbbb\nccc\n'
            if diff_index_result is not None:
                raise diff_index_result
            return b''
        self.check_output_mock.side_effect = fake_git

        self.assertEqual(autoversioning.get_version(), expected_version)

    def test_source_version_is_cached(self):
        self.check_output_mock.return_value = b'aaa\n'

        autoversioning.get_version()
        autoversioning.get_version()

        self.assertEqual(self.check_output_mock.call_count, 2, 'git should run once for rev-list and once for diff.')

    def test_fallback_version_outside_a_checkout(self):
        self.check_output_mock.side_effect = FileNotFoundError

        self.assertEqual(autoversioning.get_version(), '1.0.0')

    def test_write_package_version_file_writes_a_valid_python_file(self):
        def fake_write_file(file_contents, _):
            vars_set_in_file = {}
            exec(file_contents, {}, vars_set_in_file)  # this will raise if file_contents is not valid python code
            self.assertEqual(vars_set_in_file.get('version'), '1.2.3')
        self.patch('app.util.autoversioning.os')
        self.patch('app.util.autoversioning.fs').write_file.side_effect = fake_write_file

        autoversioning.write_package_version_file(package_version_string='1.2.3')

    def test_package_version_file_is_backed_up_and_restored(self):
        mock_os = self.patch('app.util.autoversioning.os')
        self.patch('app.util.autoversioning.fs')

        autoversioning.write_package_version_file(package_version_string='1.2.3')
        autoversioning.restore_original_package_version_file()

        self.assertEqual(mock_os.rename.call_args_list, [
            call(autoversioning._VERSION_FILE_PATH, autoversioning._VERSION_FILE_BACKUP_PATH),
            call(autoversioning._VERSION_FILE_BACKUP_PATH, autoversioning._VERSION_FILE_PATH),
        ])
