from app.frames.frame_analysis import FrameAnalysisConfig, condition_number, frame_bounds
from app.geometry.point_sequence import Chart, HyperbolicLattice, PointSequence
from app.special.wavelet_order import WaveletOrder
from app.subcommands.subcommand import Subcommand
from app.util.conf.configuration import Configuration
from app.util.exceptions import ConfigurationError


SCHEDULE_HEADER = ['M', 'a_est', 'b_est']


class FrameboundsSubcommand(Subcommand):
    """
    Estimate the frame bounds of the wavelet system over a lattice (or an explicit list of time-scale points) on the
    leading Laguerre subspaces.
    """
    command_name = 'framebounds'

    def execute(self, run_config, output, worker_pool):
        order = WaveletOrder(run_config['n'], run_config['alpha'])
        cfg = FrameAnalysisConfig(
            order,
            self._atoms(run_config),
            basis_size=run_config['basis_size'],
            basis_alpha=run_config['basis_alpha'],
            quadrature_order=run_config['quad_order'],
            window=run_config['window'],
            m_schedule=run_config['m_schedule'],
            extend=not run_config['no_extend'],
            extension_tolerance=Configuration['frame_extension_tolerance'],
            max_extension_levels=Configuration['frame_extension_max_levels'],
            max_atoms=Configuration['frame_max_atoms'],
            density_radius=Configuration['density_radius'],
        )
        report = frame_bounds(cfg, worker_pool)
        self._logger.info('Condition number b_est/a_est = {}', condition_number(report.a_est, report.b_est))

        document = dict(report.to_dict(), order=order.to_dict())
        rows = [list(entry) for entry in report.schedule]
        output.write(run_config['format'], SCHEDULE_HEADER, rows, document)

    @staticmethod
    def _atoms(run_config):
        """
        Explicit --point values take precedence over the lattice flags.

        :rtype: HyperbolicLattice | PointSequence
        """
        if run_config['point']:
            return PointSequence([complex(x, s) for x, s in run_config['point']], Chart.HALF_PLANE)
        if run_config['a'] is None or run_config['b'] is None:
            raise ConfigurationError('The framebounds command needs either --a and --b or at least one --point.')
        return HyperbolicLattice(run_config['a'], run_config['b'], (run_config['jmin'], run_config['jmax']),
                                 (run_config['kmin'], run_config['kmax']))
