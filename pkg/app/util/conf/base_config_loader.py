import os
from os.path import dirname, expanduser, join, realpath
import sys

from app.util.conf.config_file import ConfigFile
from app.util.exceptions import ConfigurationError


BASE_CONFIG_FILE_SECTION = 'general'
THREADS_ENVIRONMENT_VARIABLE = 'LWF_THREADS'


class BaseConfigLoader(object):

    CONFIG_FILE_SECTION = ''  # Override value in subclasses to load additional config.

    # Keys whose default is None still have a type for values read from the config file.
    _NULLABLE_KEY_TYPES = {
        'threads': int,
        'log_file': str,
        'verify_tolerance': float,
    }

    def configure_defaults(self, conf):
        """
        This is the base configuration. All default configuration values belong here. These values may be overridden by
        other configurations.
        :type conf: Configuration
        """
        if getattr(sys, 'frozen', False):
            root_directory = dirname(sys.executable)  # frozen
        else:
            root_directory = dirname(dirname(dirname(dirname(realpath(__file__)))))  # unfrozen
        conf.set('root_directory', root_directory)

        base_directory = join(expanduser('~'), '.lwframes')
        conf.set('base_directory', base_directory)
        # Specified in defaults since it cannot depend on values in the file it refers to.
        conf.set('config_file', join(base_directory, 'lwframes.conf'))

        conf.set('log_file', None)
        conf.set('log_level', 'WARNING')
        conf.set('max_log_file_size', 1024 * 1024 * 50)  # 50mb
        conf.set('max_log_file_backups', 5)

        conf.set('threads', None)  # None means one worker per CPU

        conf.set('density_radius', 0.99)
        conf.set('density_extension_tolerance', 1e-6)
        conf.set('density_extension_max_rounds', 8)
        conf.set('frame_extension_tolerance', 1e-8)
        conf.set('frame_extension_max_levels', 64)
        conf.set('frame_max_atoms', 500000)
        conf.set('float_digits', 17)

        conf.set('verify_tolerance', None)  # None keeps the per-suite tolerances

    def configure_postload(self, conf):
        """
        Apply the environment override for the worker count and validate the values that were read from disk.
        :type conf: Configuration
        """
        threads_override = os.environ.get(THREADS_ENVIRONMENT_VARIABLE)
        if threads_override:
            self._cast_and_set('threads', threads_override, conf)
        threads = conf.get('threads')
        if threads is not None and threads < 1:
            raise InvalidConfigError('The worker count must be at least 1 (got {}).'.format(threads))

        if not 0 < conf.get('density_radius') < 1:
            raise InvalidConfigError('density_radius must lie in (0, 1).')
        if not 1 <= conf.get('float_digits') <= 17:
            raise InvalidConfigError('float_digits must lie in [1, 17].')

    def load_from_config_file(self, config, config_filename):
        """
        A missing config file leaves the defaults in place.

        :type config: Configuration
        :type config_filename: str
        """
        if not os.path.isfile(config_filename):
            return
        self._load_section_from_config_file(config, config_filename, BASE_CONFIG_FILE_SECTION)
        if self.CONFIG_FILE_SECTION:
            self._load_section_from_config_file(config, config_filename, self.CONFIG_FILE_SECTION)

    def _get_config_file_whitelisted_keys(self):
        """
        Return the list of keys that we allow to be specified in a config file. Subclasses can override this method but
        should in general append values to the list returned by their superclass.

        :rtype: list[str]
        """
        return [
            'log_level',
            'log_file',
            'max_log_file_size',
            'max_log_file_backups',
            'threads',
            'density_radius',
            'density_extension_tolerance',
            'density_extension_max_rounds',
            'frame_extension_tolerance',
            'frame_extension_max_levels',
            'frame_max_atoms',
            'float_digits',
        ]

    def _load_section_from_config_file(self, config, config_filename, section):
        """
        Copy the values of one section of the config file into the Configuration singleton. Sections are optional.

        :type config: Configuration
        :type config_filename: str
        :type section: str
        """
        config_parsed = ConfigFile(config_filename).read_config_from_disk()
        if section not in config_parsed:
            return

        section_values = config_parsed[section]
        whitelisted_file_keys = self._get_config_file_whitelisted_keys()
        for key in section_values:
            if key not in whitelisted_file_keys:
                raise InvalidConfigError('The config file {} contains an invalid key in [{}]: {}'
                                         .format(config_filename, section, key))
            self._cast_and_set(key, section_values[key], config)

    def _cast_and_set(self, key, value, config):
        """
        Cast a string value by the type of the key's default value.

        :type key: str
        :type value: str
        :type config: Configuration
        """
        default_value = config.get(key)
        target_type = type(default_value) if default_value is not None else self._NULLABLE_KEY_TYPES.get(key, str)

        if target_type is bool:  # bool is a subclass of int so should be checked first
            value_mapping = {'true': True, 'false': False}
            if not isinstance(value, str) or value.lower() not in value_mapping:
                raise InvalidConfigError('The value for {} should be True or False, but it is "{}"'.format(key, value))
            config.set(key, value_mapping[value.lower()])

        elif target_type in (int, float):
            try:
                config.set(key, target_type(value))
            except (TypeError, ValueError):
                raise InvalidConfigError('The value for {} should be a number of type {}, but it is "{}"'
                                         .format(key, target_type.__name__, value))

        elif target_type is list:
            # ConfigObj only produces lists for comma delimited values.
            config.set(key, value if isinstance(value, list) else [value])

        else:
            if not isinstance(value, str):
                raise InvalidConfigError('The value for {} should be a string, but it is "{}"'.format(key, value))
            if value.startswith('~'):
                value = expanduser(value)
            config.set(key, value)


class InvalidConfigError(ConfigurationError):
    """
    The application config file contains an unknown key or a value that cannot be cast to the key's type.
    """
