from app.frames.threshold_sweep import SWEEP_HEADER, threshold_sweep
from app.special.wavelet_order import WaveletOrder
from app.subcommands.subcommand import Subcommand
from app.util.conf.configuration import Configuration


class SweepSubcommand(Subcommand):
    """
    Frame bounds across a list of (a, b) lattices, one row per lattice and basis size.
    """
    command_name = 'sweep'

    def execute(self, run_config, output, worker_pool):
        order = WaveletOrder(run_config['n'], run_config['alpha'])
        rows = threshold_sweep(
            order,
            run_config['pair'],
            run_config['m_schedule'],
            j_range=(run_config['jmin'], run_config['jmax']),
            k_range=(run_config['kmin'], run_config['kmax']),
            basis_alpha=run_config['basis_alpha'],
            quadrature_order=run_config['quad_order'],
            extend=not run_config['no_extend'],
            density_radius=Configuration['density_radius'],
            worker_pool=worker_pool,
            extension_tolerance=Configuration['frame_extension_tolerance'],
            max_extension_levels=Configuration['frame_extension_max_levels'],
            max_atoms=Configuration['frame_max_atoms'],
        )
        failed = sum(1 for row in rows if row.failed)
        self._logger.info('Sweep of {} lattices produced {} rows ({} failed).', len(run_config['pair']), len(rows),
                          failed)
        table = [row.as_list() for row in rows]
        document = {
            'order': order.to_dict(),
            'rows': [dict(zip(SWEEP_HEADER, row)) for row in table],
        }
        output.write(run_config['format'], SWEEP_HEADER, table, document)
