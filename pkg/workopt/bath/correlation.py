"""
Точная корреляционная функция ванны

    L(t) = (1/π)∫ dω J(ω) e^{−iωt} / (1 − e^{−βω}),

вычисляемая квадратурой Фурье на полуоси.
"""

import logging
import warnings
from functools import lru_cache

import numpy as np
from scipy.integrate import IntegrationWarning, quad

from core.exceptions import (ConfigError, NonIntegrableSpectrum,
                             QuadratureError)

logger = logging.getLogger(__name__)

EPSREL = 1e-10
LIMLST = 100
LIMIT = 200
SMALL_OMEGA = 1e-8


def _thermal_integrand(J, beta):
    zero_limit = 2.0 * J.slope() / beta

    def integrand(omega):
        if omega < SMALL_OMEGA:
            return zero_limit
        return J(omega) / np.tanh(0.5 * beta * omega)
    return integrand


def _fourier(func, weight, t, epsabs):
    with warnings.catch_warnings():
        warnings.simplefilter('error', IntegrationWarning)
        try:
            value, _ = quad(func, 0.0, np.inf, weight=weight, wvar=t,
                            epsabs=epsabs, limlst=LIMLST, limit=LIMIT)
        except IntegrationWarning as exc:
            raise QuadratureError(
                f'Квадратура не сошлась при t={t}: {exc}'
            ) from exc
    return value


@lru_cache(maxsize=65536)
def correlation_exact(J, beta, t):
    """
    Точное значение L(t).

    Re L = (1/π)∫₀^∞ J coth(βω/2) cos(ωt) dω,
    Im L = −(1/π)∫₀^∞ J sin(ωt) dω.
    В нуле подынтегральное выражение заменяется пределом 2J'(0)/β.

    Args:
        J (SpectralDensity): Спектральная плотность без омической части.
        beta (float): Обратная температура.
        t (float): Время, t > 0 (Re L расходится логарифмически при t → 0).

    Raises:
        NonIntegrableSpectrum: Если J содержит омическую часть.
        QuadratureError: Если адаптивная схема не достигла точности.
        ConfigError: Если beta <= 0 или t <= 0.

    Returns:
        complex: L(t).
    """
    if J.has_ohmic:
        raise NonIntegrableSpectrum(
            'Омическая спектральная плотность не дает конечной L(t)'
        )
    if not beta > 0:
        raise ConfigError('Требуется beta > 0')
    if not t > 0:
        raise ConfigError('L(t) вычисляется только при t > 0')
    if not J.has_drude or J.xi == 0:
        return 0j
    scale = J.gamma ** 2 * J.xi * max(1.0, 1.0 / (beta * J.gamma))
    epsabs = EPSREL * scale
    real = _fourier(_thermal_integrand(J, beta), 'cos', t, epsabs) / np.pi
    imag = -_fourier(J, 'sin', t, epsabs) / np.pi
    return complex(real, imag)
