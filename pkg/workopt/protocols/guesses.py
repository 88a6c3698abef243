"""
Начальные приближения для IMP3 и нормировка высоты импульса.

Для driven берется марковский оптимум броуновской частицы в движущейся
ловушке с ζ = 2J(ε); для tunable используется отображение на передемпфированный
случай с эффективной температурой βₑ = (2/ε)tanh(βε/2).
"""

import logging

import attrs
import numpy as np

from core.exceptions import DegenerateAnsatz
from system import DRIVEN

from .ansatz import SAWTOOTH, Imp3

logger = logging.getLogger(__name__)

DEGENERATE_TOL = 1e-14


@attrs.frozen
class Imp3Guess:
    h: float
    alpha1: float
    alpha2: float

    def protocol(self, m, tau, delta, shape=SAWTOOTH):
        return Imp3(m.lambda_i, m.lambda_f, tau, self.h, self.alpha1,
                    self.alpha2, delta, shape)


def imp3_initial_guess(m, bath, beta, tau, delta):
    """
    Начальные параметры (h, α₁, α₂) для IMP3.

    Args:
        m (TwoLevelModel): Система.
        bath (SpectralDensity): Спектральная плотность ванны.
        beta (float): Обратная температура.
        tau (float): Длительность протокола.
        delta (float): Ширина импульса.

    Raises:
        DegenerateAnsatz: Если J(ε) = 0.

    Returns:
        Imp3Guess: Начальное приближение.
    """
    eps = m.epsilon
    zeta = 2 * bath(eps)
    if zeta == 0:
        raise DegenerateAnsatz('J(ε) = 0: система не связана с ванной')
    dl = m.delta_lambda
    if m.kind == DRIVEN:
        rate = eps ** 2 / zeta
    else:
        beta_eff = (2 / eps) * np.tanh(0.5 * beta * eps)
        rate = 2 * zeta / (beta_eff * eps)
    denominator = 2 + rate * tau
    h = dl / zeta / denominator / delta if m.kind == DRIVEN else 0.0
    guess = Imp3Guess(float(h), float(dl * rate / denominator),
                      float(m.lambda_i + dl / denominator))
    logger.debug('Начальное приближение IMP3: %s', guess)
    return guess


def reparam_height(h, alpha2, lambda_i, delta):
    """
    Нормированная высота h′ = h·δ/(α₂ − λ_i).

    Raises:
        DegenerateAnsatz: Если α₂ = λ_i.
    """
    return h / HeightScale.from_parameters(alpha2, lambda_i, delta).reference


@attrs.frozen
class HeightScale:
    """
    Опорная высота h_ref = (α₂ − λ_i)/δ, фиксируемая по начальному
    приближению; оптимизация идет по h′ = h/h_ref.
    """
    reference: float = 1.0

    @classmethod
    def from_parameters(cls, alpha2, lambda_i, delta):
        if abs(alpha2 - lambda_i) < DEGENERATE_TOL:
            raise DegenerateAnsatz(
                'α₂ = λ_i: опорная высота не определена'
            )
        return cls((alpha2 - lambda_i) / delta)

    @classmethod
    def for_guess(cls, guess, lambda_i, delta):
        """Шкала начального приближения; при вырождении h не нормируется."""
        try:
            return cls.from_parameters(guess.alpha2, lambda_i, delta)
        except DegenerateAnsatz:
            logger.info('Вырожденная опорная высота, оптимизируется h')
            return cls(1.0)

    def to_normalized(self, x):
        """(h, α₁, α₂) → (h′, α₁, α₂)."""
        x = np.array(x, dtype=float)
        x[0] = x[0] / self.reference
        return x

    def to_height(self, x):
        x = np.array(x, dtype=float)
        x[0] = x[0] * self.reference
        return x
