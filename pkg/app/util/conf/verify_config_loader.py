from app.util.conf.base_config_loader import BaseConfigLoader


class VerifyConfigLoader(BaseConfigLoader):

    CONFIG_FILE_SECTION = 'verify'

    def configure_defaults(self, conf):
        """
        The verify table is logged at INFO, so the console shows it by default.

        :type conf: Configuration
        """
        super().configure_defaults(conf)
        conf.set('log_level', 'INFO')

    def _get_config_file_whitelisted_keys(self):
        return super()._get_config_file_whitelisted_keys() + ['verify_tolerance']
