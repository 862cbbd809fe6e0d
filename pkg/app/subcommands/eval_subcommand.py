import numpy as np

from app.special.circular_jacobi import circular_jacobi
from app.special.laguerre import laguerre_function, laguerre_polynomial
from app.special.rational_jacobi import s_eval, s_eval_via_disc
from app.special.wavelet_order import WaveletOrder
from app.subcommands.subcommand import Subcommand
from app.transforms.paul import paul_wavelet
from app.util.exceptions import ConfigurationError


_COMPLEX_FAMILIES = {
    'S': s_eval,
    'S-disc': s_eval_via_disc,
}
_REAL_FAMILIES = {
    'laguerre': laguerre_polynomial,
    'laguerre-fn': laguerre_function,
}


class EvalSubcommand(Subcommand):
    """
    Tabulate one of the special functions on a grid: S_n^alpha by either route, L_n^alpha, l_n^alpha, g_n^alpha or
    the Paul wavelet.
    """
    command_name = 'eval'

    def execute(self, run_config, output, worker_pool):
        family = run_config['family']
        order = WaveletOrder(run_config['n'], run_config['alpha'])

        if family == 'circular-jacobi':
            z = self._disc_points(run_config)
            values = np.asarray(circular_jacobi(order, z), dtype=complex).reshape(-1)
            header = ['z_re', 'z_im', 're', 'im']
            rows = [[point.real, point.imag, value.real, value.imag] for point, value in zip(z, values)]
        elif family in _REAL_FAMILIES:
            grid = self._grid(run_config, 'x')
            values = np.asarray(_REAL_FAMILIES[family](order, grid), dtype=float).reshape(-1)
            header = ['x', 'value']
            rows = [[x, value] for x, value in zip(grid, values)]
        else:
            grid = self._grid(run_config, 't')
            if family == 'paul':
                values = paul_wavelet(order.alpha, grid)
            else:
                values = _COMPLEX_FAMILIES[family](order, grid)
            values = np.asarray(values, dtype=complex).reshape(-1)
            header = ['t', 're', 'im']
            rows = [[t, value.real, value.imag] for t, value in zip(grid, values)]

        self._logger.info('Evaluated {} at {} points.', family, len(rows))
        document = {
            'family': family,
            'order': order.to_dict(),
            'rows': [dict(zip(header, row)) for row in rows],
        }
        output.write(run_config['format'], header, rows, document)

    @staticmethod
    def _grid(run_config, variable):
        """
        Explicit --t/--x values win over the --t-min/--t-max/--points grid.

        :rtype: numpy.ndarray
        """
        explicit = run_config[variable] or run_config['x' if variable == 't' else 't']
        if explicit:
            return np.array(explicit, dtype=float)
        points = run_config['points']
        if points < 1:
            raise ConfigurationError('The grid needs at least one point (got {}).'.format(points))
        if points == 1:
            return np.array([run_config['t_min']], dtype=float)
        if not run_config['t_max'] > run_config['t_min']:
            raise ConfigurationError('The grid needs t_max > t_min (got {} .. {}).'.format(run_config['t_min'],
                                                                                          run_config['t_max']))
        return np.linspace(run_config['t_min'], run_config['t_max'], points)

    @staticmethod
    def _disc_points(run_config):
        real_parts, imaginary_parts = run_config['z_re'], run_config['z_im']
        if not real_parts or not imaginary_parts:
            raise ConfigurationError('The circular-jacobi family needs points given with --z-re and --z-im.')
        if len(real_parts) != len(imaginary_parts):
            raise ConfigurationError('--z-re and --z-im must be given the same number of times ({} vs {}).'
                                     .format(len(real_parts), len(imaginary_parts)))
        return np.array(real_parts, dtype=float) + 1j * np.array(imaginary_parts, dtype=float)
