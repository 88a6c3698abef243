"""
Ядро трения Δ(t) обобщенного уравнения Ланжевена.
"""

import numpy as np


def friction_kernel(J, t):
    """
    Гладкая часть ядра трения Δ(t) = (2/π)∫₀^∞ dω (J(ω)/ω) cos(ωt).

    Для Друде это γξe^{−γ|t|}. Дельта-вклад омической части сюда не
    входит, его вес возвращает delta_weight.

    Args:
        J (SpectralDensity): Спектральная плотность.
        t (float | numpy.ndarray): Время, любого знака.

    Returns:
        float | numpy.ndarray: Гладкая часть ядра.
    """
    t = np.asarray(t, dtype=float)
    value = np.zeros_like(t)
    if J.has_drude:
        value = value + J.gamma * J.xi * np.exp(-J.gamma * np.abs(t))
    if value.ndim == 0:
        return float(value)
    return value


def delta_weight(J):
    """Вес ζ/ε слагаемого (ζ/ε)δ(t) омической части."""
    if J.has_ohmic:
        return J.zeta / J.epsilon
    return 0.0


def friction_laplace(J, z):
    """
    Преобразование Лапласа ядра на полуоси.

    Δ̂(z) = ζ/(2ε) + ξγ/(z + γ); дельта-функция на границе входит
    с половинным весом.
    """
    value = 0.5 * delta_weight(J)
    if J.has_drude:
        value = value + J.xi * J.gamma / (z + J.gamma)
    return value
