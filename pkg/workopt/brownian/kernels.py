"""
Функции отклика ловушки: G₊(t) для недодемпфированного режима и F(t)
для передемпфированного.
"""

import attrs
import numpy as np
from scipy.linalg import expm

from .trap import UNDERDAMPED

CONFLUENT_RTOL = 1e-12


class _StepPropagators:
    """expm(A·h) для встречающихся шагов h."""

    def __init__(self, matrix):
        self.matrix = matrix
        self._cache = {}

    def __call__(self, h):
        key = round(h, 14)
        if key not in self._cache:
            self._cache[key] = expm(self.matrix * h)
        return self._cache[key]


def green_plus(model, times):
    """
    G₊(t) и Ġ₊(t) недодемпфированной ловушки.

    G̈₊ = −2ε∫₀ᵗΔ(t−s)Ġ₊(s)ds − ε²G₊, G₊(0) = 0, Ġ₊(0) = 1. Решение
    однородной системы переносится точной экспонентой между узлами.

    Args:
        model (TrapModel): Ловушка; режим используется только для матрицы.
        times (numpy.ndarray): Возрастающие узлы, times[0] = 0.

    Returns:
        tuple[numpy.ndarray, numpy.ndarray]: G₊ и Ġ₊ на узлах.
    """
    if model.regime != UNDERDAMPED:
        model = attrs.evolve(model, regime=UNDERDAMPED)
    times = np.asarray(times, dtype=float)
    step = _StepPropagators(model.state_matrix())
    z = np.array([0.0, 1.0, 0.0])
    values = np.empty((len(times), 3))
    values[0] = z
    for n in range(1, len(times)):
        z = step(times[n] - times[n - 1]) @ z
        values[n] = z
    return values[:, 0], values[:, 1]


@attrs.frozen
class OverdampedKernel:
    """
    F(t): обратное преобразование Лапласа F̂(z) = [ε + 2zΔ̂(z)]⁻¹.

    F(t) = Σcᵢe^{rᵢt} по корням знаменателя; при кратном корне
    F(t) = (1/w)[1 + (r+γ)t]e^{rt}.

    Attributes:
        rates (tuple): Корни rᵢ.
        amplitudes (tuple): Вычеты cᵢ.
        confluent (bool): Кратный корень.
        weight (float): w = ζ/ε.
        gamma (float): γ ванны.
    """
    rates: tuple
    amplitudes: tuple
    confluent: bool
    weight: float
    gamma: float

    @property
    def initial(self):
        """F(0) = lim z·F̂(z) = 1/w."""
        return 1.0 / self.weight

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        if self.confluent:
            r = self.rates[0]
            return (1 + (r + self.gamma) * t) * np.exp(r * t) / self.weight
        return sum(c * np.exp(r * t)
                   for c, r in zip(self.amplitudes, self.rates))

    def derivative(self, t):
        t = np.asarray(t, dtype=float)
        if self.confluent:
            r = self.rates[0]
            g = self.gamma
            return ((r + g) + r * (1 + (r + g) * t)) * np.exp(r * t) \
                / self.weight
        return sum(c * r * np.exp(r * t)
                   for c, r in zip(self.amplitudes, self.rates))


def overdamped_kernel(model):
    """
    Ядро F(t) передемпфированной ловушки с Δ̂(z) = ζ/(2ε) + ξγ/(z+γ).

    F̂(z) = (z+γ)/(wz² + (ε + wγ + 2ξγ)z + εγ).

    Returns:
        OverdampedKernel: Разложение по простым дробям.
    """
    eps, w, g, xi = model.epsilon, model.weight, model.gamma, model.xi
    b = eps + w * g + 2 * xi * g
    disc = b ** 2 - 4 * w * eps * g
    if disc <= CONFLUENT_RTOL * b ** 2:
        r = -b / (2 * w)
        return OverdampedKernel((r,), (), True, w, g)
    root = np.sqrt(disc)
    r1 = (-b + root) / (2 * w)
    r2 = (-b - root) / (2 * w)
    c1 = (r1 + g) / (w * (r1 - r2))
    c2 = (r2 + g) / (w * (r2 - r1))
    return OverdampedKernel((r1, r2), (c1, c2), False, w, g)
