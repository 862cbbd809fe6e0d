import numpy as np

from app.quadrature.strip_integration import strip_grid
from app.special.wavelet_order import WaveletOrder
from app.subcommands.subcommand import Subcommand
from app.transforms.spectral_signal import SpectralSignal
from app.transforms.wavelet_transform import window_coefficients
from app.transforms.windows import make_window


TRANSFORM_HEADER = ['x', 's', 're', 'im']


class TransformSubcommand(Subcommand):
    """
    Tabulate the wavelet transform of a signal given by its Laguerre-basis coefficients on an x-by-s grid (x
    equispaced, s equispaced in log s), one row per grid point, scale-major.
    """
    command_name = 'transform'

    def execute(self, run_config, output, worker_pool):
        order = WaveletOrder(run_config['n'], run_config['alpha'])
        basis_alpha = order.alpha if run_config['basis_alpha'] is None else run_config['basis_alpha']
        signal = SpectralSignal(basis_alpha, run_config['coefficients'])
        window = make_window(run_config['window'], order)
        xs, scales = strip_grid((run_config['x_min'], run_config['x_max']), (run_config['s_min'], run_config['s_max']),
                                run_config['nx'], run_config['ns'])
        quadrature_order = run_config['quad_order']

        def scale_row(scale):
            return np.asarray(window_coefficients(signal, window, xs, scale, quadrature_order), dtype=complex)

        values = worker_pool.map(scale_row, list(scales))
        rows = []
        for scale, row in zip(scales, values):
            rows.extend([x, scale, value.real, value.imag] for x, value in zip(xs, row))

        self._logger.info('Transformed a signal with {} coefficients on a {}x{} grid with the {} window.',
                          len(run_config['coefficients']), len(xs), len(scales), window.name)
        document = {
            'order': order.to_dict(),
            'window': window.name,
            'basis_alpha': basis_alpha,
            'coefficients': [complex(c) for c in run_config['coefficients']],
            'rows': [dict(zip(TRANSFORM_HEADER, row)) for row in rows],
        }
        output.write(run_config['format'], TRANSFORM_HEADER, rows, document)
