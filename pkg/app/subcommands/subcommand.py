from app.util import log
from app.util.conf.configuration import Configuration
from app.util.run_config import RunConfig
from app.util.tabular_output import TabularOutput
from app.util.unhandled_exception_handler import UnhandledExceptionHandler
from app.util.worker_pool import WorkerPool


class Subcommand(object):
    """
    Base class of the CLI commands. run() receives the parsed flags as keyword arguments, builds the RunConfig and
    hands it to execute() together with the output writer and a worker pool.
    """
    command_name = None

    def __init__(self):
        self._logger = log.get_logger(__name__)

    def run(self, log_level=None, run_config_file=None, **flag_values):
        """
        :param log_level: the log level at which to do application logging (or None for default log level)
        :type log_level: str | None
        :param run_config_file: path of a JSON or YAML experiment file
        :type run_config_file: str | None
        :param flag_values: the flags that were given on the command line
        :type flag_values: dict
        """
        log.configure_logging(
            log_level=log_level or Configuration['log_level'],
            log_file=Configuration['log_file'],
            simplified_console_logs=True,
        )
        self._logger.debug('Application configuration: {}', Configuration.singleton().snapshot())
        run_config = RunConfig.from_sources(self.command_name, flag_values, run_config_file)
        output = TabularOutput(run_config['out'], Configuration['float_digits'])
        with WorkerPool() as worker_pool:
            UnhandledExceptionHandler.singleton().add_teardown_callback(worker_pool.shutdown)
            self.execute(run_config, output, worker_pool)

    def execute(self, run_config, output, worker_pool):
        """
        :type run_config: RunConfig
        :type output: TabularOutput
        :type worker_pool: WorkerPool
        """
        raise NotImplementedError
