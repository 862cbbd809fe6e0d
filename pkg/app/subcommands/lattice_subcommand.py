from app.geometry.density import density_thresholds, lattice_density
from app.geometry.point_sequence import HyperbolicLattice, generate_lattice, is_separated, separation_constant
from app.special.wavelet_order import WaveletOrder
from app.subcommands.subcommand import Subcommand
from app.util.conf.configuration import Configuration
from app.util.tabular_output import TabularOutput


LATTICE_HEADER = ['j', 'k', 're_u', 'im_u', 're_d', 'im_d']


class LatticeSubcommand(Subcommand):
    """
    Generate a hyperbolic lattice in both charts and summarize its density against the frame thresholds.
    """
    command_name = 'lattice'

    def execute(self, run_config, output, worker_pool):
        order = WaveletOrder(run_config['n'], run_config['alpha'])
        lattice = HyperbolicLattice(run_config['a'], run_config['b'], (run_config['jmin'], run_config['jmax']),
                                    (run_config['kmin'], run_config['kmax']))
        radius = run_config['radius'] or Configuration['density_radius']

        sequence = generate_lattice(lattice)
        halfplane = sequence.points
        disc = sequence.to_disc().points
        rows = [[j, k, u.real, u.imag, d.real, d.imag] for (j, k), u, d in zip(sequence.labels, halfplane, disc)]

        density = lattice_density(lattice, radius, extend=not run_config['no_extend'],
                                  tolerance=Configuration['density_extension_tolerance'],
                                  max_rounds=Configuration['density_extension_max_rounds'],
                                  worker_pool=worker_pool)
        separation = separation_constant(sequence, worker_pool) if len(sequence) >= 2 else None
        disc_threshold, lattice_threshold = density_thresholds(order)
        summary = {
            'density_estimate': density.estimate,
            'theoretical_density': lattice.theoretical_density(),
            'disc_threshold': disc_threshold,
            'lattice_threshold': lattice_threshold,
            'separated': None if separation is None else is_separated(separation),
            'separation': separation,
            'b_log_a': lattice.b_log_a,
            'point_count': len(sequence),
            'lattice': lattice.to_dict(),
            'order': order.to_dict(),
            'density': density.to_dict(),
        }
        self._logger.info('Lattice with {} points: density estimate {} (theory {}), b log a = {} vs threshold {}.',
                          len(sequence), density.estimate, summary['theoretical_density'], lattice.b_log_a,
                          lattice_threshold)

        if run_config['format'] == 'json':
            output.write_json(dict(summary, points=[dict(zip(LATTICE_HEADER, row)) for row in rows]))
            return
        output.write_csv(LATTICE_HEADER, rows)
        if run_config['summary_out']:
            TabularOutput(run_config['summary_out'], Configuration['float_digits']).write_json(summary)
        else:
            self._logger.info('Summary:\n{}', TabularOutput.json_text(summary))
