"""
Спектральные плотности бозонной ванны.

Все величины в единицах ε = ħ = 1, если не оговорено иное.
"""

import attrs
import numpy as np

from core.exceptions import ConfigError

DRUDE = 'drude'
OHMIC = 'ohmic'
OHMIC_PLUS_DRUDE = 'ohmic_plus_drude'
KINDS = (DRUDE, OHMIC, OHMIC_PLUS_DRUDE)


@attrs.frozen
class SpectralDensity:
    """
    Спектральная плотность J(ω).

    Варианты:
    - drude: J = γ²ξω/(ω²+γ²);
    - ohmic: J = ζω/(2ε);
    - ohmic_plus_drude: сумма двух предыдущих.

    Attributes:
        kind (str): Вариант спектральной плотности.
        gamma (float): Скорость затухания памяти γ.
        xi (float): Сила связи ξ.
        zeta (float): Коэффициент трения ζ омической части.
        epsilon (float): Опорная частота ε омической части.
    """
    kind: str
    gamma: float = 1.0
    xi: float = 0.0
    zeta: float = 0.0
    epsilon: float = 1.0

    def __attrs_post_init__(self):
        if self.kind not in KINDS:
            raise ConfigError(f'Неизвестный тип спектральной плотности: '
                              f'{self.kind}')
        if self.has_drude and not self.gamma > 0:
            raise ConfigError('Требуется gamma > 0')
        if self.xi < 0 or self.zeta < 0:
            raise ConfigError('Требуется xi >= 0 и zeta >= 0')
        if not self.epsilon > 0:
            raise ConfigError('Требуется epsilon > 0')

    @classmethod
    def drude(cls, gamma, xi):
        return cls(DRUDE, gamma=gamma, xi=xi)

    @classmethod
    def ohmic(cls, zeta, epsilon=1.0):
        return cls(OHMIC, zeta=zeta, epsilon=epsilon)

    @classmethod
    def ohmic_plus_drude(cls, zeta, gamma, xi, epsilon=1.0):
        return cls(OHMIC_PLUS_DRUDE, gamma=gamma, xi=xi, zeta=zeta,
                   epsilon=epsilon)

    @property
    def has_drude(self):
        return self.kind in (DRUDE, OHMIC_PLUS_DRUDE)

    @property
    def has_ohmic(self):
        return self.kind in (OHMIC, OHMIC_PLUS_DRUDE) and self.zeta > 0

    def slope(self):
        """Производная J'(0)."""
        value = 0.0
        if self.has_drude:
            value += self.xi
        if self.kind != DRUDE:
            value += self.zeta / (2 * self.epsilon)
        return value

    def __call__(self, omega):
        return spectral_value(self, omega)


def spectral_value(J, omega):
    """
    Значение спектральной плотности.

    Args:
        J (SpectralDensity): Спектральная плотность.
        omega (float | numpy.ndarray): Частота, любого знака.

    Returns:
        float | numpy.ndarray: J(ω); нечетная функция частоты.
    """
    w = np.asarray(omega, dtype=float)
    value = np.zeros_like(w)
    if J.has_drude:
        value = value + J.gamma ** 2 * J.xi * w / (w ** 2 + J.gamma ** 2)
    if J.kind != DRUDE:
        value = value + J.zeta * w / (2 * J.epsilon)
    if value.ndim == 0:
        return float(value)
    return value


def bose_factor(omega, beta):
    """Распределение Бозе n_β(ω) = 1/(e^{βω} − 1)."""
    return 1.0 / np.expm1(beta * np.asarray(omega, dtype=float))
