from cx_Freeze import setup, Executable
import sys

# cx_Freeze's module finder recurses through the import graph and exceeds the default limit.
sys.setrecursionlimit(5000)

from app.util import autoversioning


buildOptions = {
    'excludes': ['tkinter'],
    'build_exe': 'dist',
    'include_files': [
        ('lwframes.yaml', 'lwframes.yaml'),
    ],
    'packages': ['numpy'],
    'optimize': 1,  # This should not be set to 2 because that removes docstrings needed for command line help.
}

base = 'Console'

executable_name = 'lwframes.exe' if sys.platform.startswith('win') else 'lwframes'
executables = [
    Executable('main.py', base=base, target_name=executable_name)
]

version = autoversioning.get_version()
autoversioning.write_package_version_file(version)

setup(name='lwframes',
      version=version,
      description='Laguerre wavelet frames: special functions, hyperbolic lattices and frame bound estimates.',
      options=dict(build_exe=buildOptions),
      executables=executables)

autoversioning.restore_original_package_version_file()
