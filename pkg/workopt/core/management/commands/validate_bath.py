import numpy as np

from bath import correlation_exact
from bath.expansion import fit_grid
from core.config import build_bath, build_expansion, build_run
from core.management.base import WorkoptCommand
from core.outputs import write_csv, write_json

SPECTRUM_POINTS = 201


def correlation_rows(expansion, bath, beta, points):
    for t in fit_grid(bath, beta, points):
        exact = correlation_exact(bath, beta, float(t))
        fitted = complex(expansion.evaluate(t))
        yield {
            't': t,
            're_exact': exact.real,
            'im_exact': exact.imag,
            're_fit': fitted.real,
            'im_fit': fitted.imag,
        }


def detailed_balance_deviation(expansion, bath, beta):
    """max |L̂(−ω) − e^{−βω}L̂(ω)| / max |L̂| на сетке |ω| ≤ max(5γ, 5/β)."""
    limit = max(5 * bath.gamma, 5 / beta)
    omega = np.linspace(1e-3, limit, SPECTRUM_POINTS)
    forward = expansion.spectrum(omega)
    backward = expansion.spectrum(-omega)
    scale = np.max(np.abs(forward))
    return float(np.max(np.abs(backward - np.exp(-beta * omega) * forward))
                 / scale)


class Command(WorkoptCommand):
    """
    Проверка экспоненциального разложения ванны: точная L(t) против
    разложения и детальное равновесие спектра.
    """
    help = 'Проверка разложения корреляционной функции ванны'

    def run(self, config, **options):
        bath, beta = build_bath(config['bath'])
        run = build_run(config['solver'])
        expansion = build_expansion(bath, beta, run)
        points = min(run.fit_points, 400)
        write_csv(self.out_path(config, 'correlation.csv'),
                  correlation_rows(expansion, bath, beta, points))
        balance = detailed_balance_deviation(expansion, bath, beta)
        write_json(self.out_path(config, 'summary.json'), {
            'K': expansion.K,
            'fit_error': expansion.fit_error,
            'eta': expansion.eta,
            'terms': [
                {'d': t.d, 'd_conj': t.d_conj, 'z': t.z}
                for t in expansion.terms
            ],
            'detailed_balance': balance,
            'config': config.describe(),
        })
        self.success(f'K = {expansion.K}, невязка {expansion.fit_error:.3e}, '
                     f'детальное равновесие {balance:.3e}')
