"""
Разность свободных энергий ΔF.

Режим protocol: работа линейного протокола при большом τq.
Режим integration: квадратура Гаусса-Лежандра от ∫dλ tr[∂_λH_S ρ_S^eq(λ)]
по стационарным приведенным состояниям, точный квазистатический предел.
"""

import logging

import numpy as np
from django.conf import settings

from core.exceptions import ConfigError
from dynamics import equilibrate, propagate, steady_state
from protocols import Linear
from system import DRIVEN, dh_dlambda, expectation

from .work import work

logger = logging.getLogger(__name__)

INTEGRATION = 'integration'
PROTOCOL = 'protocol'
MODES = (INTEGRATION, PROTOCOL)


def quasistatic_tau(m):
    """Длительность квазистатического протокола из settings.WORKOPT."""
    conf = settings.WORKOPT
    if m.kind == DRIVEN:
        return conf['TAU_QUASISTATIC_DRIVEN']
    return conf['TAU_QUASISTATIC_TUNABLE']


def free_energy_difference(solver, mode=INTEGRATION, dt=1e-3, tau_q=None,
                           nodes=16, eq_tol=1e-12, eq_t_max=1e3):
    """
    Разность свободных энергий для системы решателя.

    Args:
        solver (Solver): Решатель (рекомендуется HEOM).
        mode (str): integration или protocol.
        dt (float): Шаг для режима protocol.
        tau_q (float | None): Длительность квазистатического протокола.
        nodes (int): Число узлов квадратуры Гаусса-Лежандра.
        eq_tol (float): Порог стационарности.
        eq_t_max (float): Предельное время релаксации.

    Raises:
        ConfigError: Для неизвестного режима.

    Returns:
        float: ΔF.
    """
    m = solver.model
    if m.lambda_i == m.lambda_f:
        return 0.0
    if mode == INTEGRATION:
        x, weights = np.polynomial.legendre.leggauss(nodes)
        half = 0.5 * (m.lambda_f - m.lambda_i)
        mid = 0.5 * (m.lambda_f + m.lambda_i)
        force = dh_dlambda(m)
        values = [
            expectation(force, solver.reduced(steady_state(solver,
                                                           mid + half * xk)))
            for xk in x
        ]
        value = float(half * np.dot(weights, values))
    elif mode == PROTOCOL:
        tau_q = quasistatic_tau(m) if tau_q is None else tau_q
        y0 = equilibrate(solver, tol=eq_tol, t_max=eq_t_max)
        protocol = Linear(m.lambda_i, m.lambda_f, tau_q)
        value = work(propagate(solver, y0, protocol, dt), m)
    else:
        raise ConfigError(f'Неизвестный режим вычисления ΔF: {mode}')
    logger.info('ΔF (%s, %s) = %.10g', solver.method, mode, value)
    return value
