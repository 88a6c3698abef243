"""
Работа W = (1/√2)∫λ̇⟨q⟩dt = −∫ẋ⟨q⟩dt во временной области.

Между узлами x(t) линейна, и расширенная система (z, ∫q, x, ẋ)
переносится точной экспонентой. Скачки x на границах дают −Δx·q;
дельта-импульс площади c по x (площадь a по λ, c = −a/√2) меняет
скорость на εc и добавляет к работе c·q̇ + εc²/2.
"""

import numpy as np
from scipy.linalg import expm

from core.exceptions import ConfigError
from protocols import sample_on_grid

from .trap import OVERDAMPED, to_position


class _SegmentPropagators:

    def __init__(self, model):
        n = model.dim
        matrix = np.zeros((n + 3, n + 3))
        matrix[:n, :n] = model.state_matrix()
        matrix[:n, n + 1] = model.forcing()
        matrix[n, 0] = 1.0
        matrix[n + 1, n + 2] = 1.0
        self.matrix = matrix
        self.dim = n
        self._cache = {}

    def __call__(self, h):
        key = round(h, 14)
        if key not in self._cache:
            self._cache[key] = expm(self.matrix * h)
        return self._cache[key]


def _kick(model, z, area):
    """Импульс площади area по λ; возвращает вклад в работу."""
    if area == 0:
        return 0.0
    if model.regime == OVERDAMPED:
        raise ConfigError(
            'Дельта-импульсы в передемпфированном режиме дают '
            'бесконечную работу'
        )
    c = float(to_position(area))
    work = c * z[1] + 0.5 * model.epsilon * c ** 2
    z[1] += model.epsilon * c
    return work


def trap_trajectory(model, times, lambdas, kick_start=0.0, kick_end=0.0):
    """
    Среднее положение и работа для протокола, заданного узлами.

    Args:
        model (TrapModel): Ловушка.
        times (numpy.ndarray): Узлы от 0 до τ.
        lambdas (numpy.ndarray): λ(0⁺), ..., λ(τ⁻) в узлах; между узлами
            протокол линеен, вне отрезка равен λ_i и λ_f.
        kick_start (float): Площадь импульса по λ в t = 0.
        kick_end (float): Площадь импульса по λ в t = τ.

    Returns:
        tuple[numpy.ndarray, float]: ⟨q⟩ в узлах (после импульсов) и W.
    """
    times = np.asarray(times, dtype=float)
    x = to_position(lambdas)
    if len(times) != len(x) or len(times) < 2:
        raise ConfigError('Нужны согласованные узлы, не меньше двух')
    step = _SegmentPropagators(model)
    n = model.dim
    z = model.initial_state()
    work = _kick(model, z, kick_start)
    work -= (x[0] - model.x_i) * z[0]
    positions = np.empty(len(times))
    positions[0] = z[0]
    for k in range(len(times) - 1):
        h = times[k + 1] - times[k]
        slope = (x[k + 1] - x[k]) / h
        u = np.concatenate((z, [0.0, x[k], slope]))
        u = step(h) @ u
        z = u[:n]
        work -= slope * u[n]
        positions[k + 1] = z[0]
    work += _kick(model, z, kick_end)
    work -= (model.x_f - x[-1]) * z[0]
    return positions, float(work)


def trap_work(model, times, lambdas, kick_start=0.0, kick_end=0.0):
    """Работа протокола, заданного узлами; см. trap_trajectory."""
    return trap_trajectory(model, times, lambdas, kick_start, kick_end)[1]


def protocol_work(model, protocol, step):
    """
    Работа протокола из пакета protocols на сетке шага step.

    Конечные значения протокола должны совпадать с λ_i, λ_f ловушки.
    """
    if (protocol.lambda_i, protocol.lambda_f, protocol.tau) != (
            model.lambda_i, model.lambda_f, model.tau):
        raise ConfigError('Протокол и ловушка заданы для разных λ_i, λ_f, τ')
    times, values = sample_on_grid(protocol, step)
    return trap_work(model, times, values)
