from threading import RLock


class Singleton(object):
    """
    One shared instance per subclass, created on first use by singleton(). Direct instantiation of a subclass that
    already has its instance raises, so callers cannot silently end up with a second copy of global state such as
    the Configuration or the UnhandledExceptionHandler.
    """

    _instance_lock = RLock()
    _singleton_instance = None

    @classmethod
    def singleton(cls):
        with cls._instance_lock:
            if cls._singleton_instance is None:
                cls._singleton_instance = cls()
            return cls._singleton_instance

    @classmethod
    def reset_singleton(cls):
        """
        Drop the shared instance; the next singleton() call builds a fresh one. Unit tests reset every singleton in
        setUp.
        """
        with cls._instance_lock:
            cls._singleton_instance = None

    def __init__(self):
        with self._instance_lock:
            if type(self)._singleton_instance is not None:
                raise SingletonError('{} already has an instance; use {}.singleton().'.format(
                    type(self).__name__, type(self).__name__))


class SingletonError(Exception):
    """
    Raised when a second instance of a singleton class is created directly.
    """
