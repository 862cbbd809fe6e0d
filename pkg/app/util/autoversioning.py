import os
import subprocess

from app.util import fs


_MAJOR_MINOR_VERSION = '0.1'

_calculated_version = None  # cached so that the version cannot change during execution
_VERSION_FILE_PATH = os.path.join(os.path.dirname(__file__), 'package_version.py')
_VERSION_FILE_BACKUP_PATH = os.path.join(os.path.dirname(__file__), 'package_version.py.bak')


def get_version():
    """
    The version of the application, both frozen and running from a source checkout.

    :rtype: str
    """
    return _get_frozen_package_version() or _calculate_source_version() or '{}.0'.format(_MAJOR_MINOR_VERSION)


def _try_rename(src, dst):
    try:
        os.rename(src, dst)
    except (FileExistsError, FileNotFoundError):
        pass


def write_package_version_file(package_version_string):
    """
    Hard code the version into package_version.py while freezing a release. The original file is backed up and can be
    restored with restore_original_package_version_file().

    :type package_version_string: str
    """
    package_version_file_contents = 'version = "{}"  # DO NOT COMMIT\n'.format(package_version_string)
    _try_rename(_VERSION_FILE_PATH, _VERSION_FILE_BACKUP_PATH)
    fs.write_file(package_version_file_contents, _VERSION_FILE_PATH)


def restore_original_package_version_file():
    _try_rename(_VERSION_FILE_BACKUP_PATH, _VERSION_FILE_PATH)


def _get_frozen_package_version():
    """
    :return: the version written by write_package_version_file(), or None when running from source
    :rtype: str | None
    """
    try:
        from app.util import package_version  # pylint: disable=no-name-in-module
        return package_version.version
    except ImportError:
        return None


def _calculate_source_version():
    """
    <major>.<minor>.<commit count>, with a "-mod" suffix when tracked files have uncommitted changes. Returns None
    outside of a git checkout.

    :rtype: str | None
    """
    global _calculated_version
    if _calculated_version is None:
        try:
            commit_count = len(_execute_local_git_command('rev-list', 'HEAD').split())
            mod_extension = '-mod' if _repo_has_uncommitted_changes() else ''
            _calculated_version = '{}.{}{}'.format(_MAJOR_MINOR_VERSION, commit_count, mod_extension)
        except (subprocess.CalledProcessError, FileNotFoundError):
            _calculated_version = None
    return _calculated_version


def _repo_has_uncommitted_changes():
    try:
        _execute_local_git_command('diff-index', '--quiet', 'HEAD')
    except subprocess.CalledProcessError:  # non-zero exit means there are changes
        return True
    return False


def _execute_local_git_command(*args):
    command_output = subprocess.check_output(
        ['git'] + list(args),
        cwd=os.path.dirname(__file__),
        stderr=subprocess.DEVNULL,
    )
    return command_output.decode()
