"""
Согласование шага интегрирования с длительностью протокола и шириной импульса.
"""

import numpy as np

from core.exceptions import GridMismatch

GRID_RTOL = 1e-9


def steps_per(length, dt):
    """
    Число шагов dt на отрезке length.

    Raises:
        GridMismatch: Если length/dt не целое в пределах 1e-9 относительной
            погрешности.
    """
    if not dt > 0:
        raise GridMismatch('Требуется dt > 0')
    ratio = length / dt
    n = int(round(ratio))
    if n < 1 or abs(ratio - n) > GRID_RTOL * max(1.0, ratio):
        raise GridMismatch(
            f'Шаг dt={dt:g} не укладывается целое число раз в {length:g}'
        )
    return n


def time_grid(tau, dt, delta=None):
    """
    Равномерная сетка tₙ на [0, τ].

    Args:
        tau (float): Длительность протокола.
        dt (float): Шаг.
        delta (float | None): Ширина импульса, которую шаг тоже должен делить.

    Returns:
        numpy.ndarray: Узлы сетки, t₀ = 0 и t_N = τ точно.
    """
    if delta is not None:
        steps_per(delta, dt)
    n = steps_per(tau, dt)
    return np.linspace(0.0, tau, n + 1)
