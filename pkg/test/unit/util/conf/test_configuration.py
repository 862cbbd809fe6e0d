from app.util.conf.configuration import Configuration
from test.framework.base_unit_test_case import BaseUnitTestCase


class TestConfiguration(BaseUnitTestCase):

    def test_keyed_access_and_set_reach_the_same_values(self):
        Configuration['density_radius'] = 0.95
        Configuration.singleton().set('float_digits', 12)

        self.assertEqual(Configuration.singleton().get('density_radius'), 0.95)
        self.assertEqual(Configuration['float_digits'], 12)

    def test_membership(self):
        self.assertIn('frame_max_atoms', Configuration)
        self.assertNotIn('protocol_scheme', Configuration)

    def test_get_with_default_tolerates_unset_keys(self):
        self.assertIsNone(Configuration.singleton().get('verify_tolerance_override', None))
        with self.assertRaises(KeyError):
            Configuration.singleton().get('verify_tolerance_override')

    def test_snapshot_is_a_copy(self):
        snapshot = Configuration.singleton().snapshot()
        snapshot['threads'] = 64

        self.assertEqual(Configuration['threads'], 1)
        self.assertEqual(snapshot['density_radius'], 0.99)

    def test_standalone_instance_does_not_touch_the_singleton(self):
        standalone = Configuration(as_instance=True).set('log_level', 'DEBUG')

        self.assertEqual(standalone.get('log_level'), 'DEBUG')
        self.assertEqual(Configuration['log_level'], 'WARNING')
