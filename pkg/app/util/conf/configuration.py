from app.util.singleton import Singleton


_MISSING = object()


class _ConfigurationMetaclass(type):
    """
    Keyed access on the class itself forwards to the singleton instance.
    """
    def __getitem__(cls, key):
        return cls.singleton().get(key)

    def __setitem__(cls, key, value):
        cls.singleton().set(key, value)

    def __contains__(cls, key):
        return key in cls.singleton().properties


class Configuration(Singleton, metaclass=_ConfigurationMetaclass):
    """
    The application settings of one lwframes run. Defaults come from BaseConfigLoader.configure_defaults, the
    [general] and per-command sections of lwframes.conf override them.

    >>> radius = Configuration['density_radius']
    >>> threads = Configuration.singleton().get('threads', None)
    """

    def __init__(self, as_instance=False):
        """
        :param as_instance: create a standalone instance instead of the singleton
        :type as_instance: bool
        """
        if not as_instance:
            super().__init__()
        self.properties = {}

    def set(self, name, value):
        self.properties[name] = value
        return self

    def get(self, name, default=_MISSING):
        """
        :param default: returned for an unset key; without it an unset key raises KeyError
        """
        if default is _MISSING:
            return self.properties[name]
        return self.properties.get(name, default)

    def snapshot(self):
        """
        A copy of every setting, for run metadata.

        :rtype: dict
        """
        return dict(self.properties)
