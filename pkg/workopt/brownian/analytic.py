"""
Марковские оптимумы ловушки с омическим трением.
"""

import attrs

from bath import SpectralDensity
from core.exceptions import ConfigError

from .trap import OVERDAMPED, UNDERDAMPED, TrapModel
from .work import trap_work


@attrs.frozen
class TrapOptimum:
    """
    Протокол вида λ(t) = slope·t + intercept внутри (0, τ) с импульсами
    площади area в t = 0 и −area в t = τ.

    Attributes:
        slope (float): Наклон внутренней прямой.
        intercept (float): λ(0⁺).
        area (float): Площадь импульса по λ.
        work (float): Работа W*.
        tau (float): Длительность.
    """
    slope: float
    intercept: float
    area: float
    work: float
    tau: float

    @property
    def end_value(self):
        """λ(τ⁻)."""
        return self.intercept + self.slope * self.tau

    def summary(self):
        return {
            'slope': self.slope,
            'intercept': self.intercept,
            'end_value': self.end_value,
            'area': self.area,
            'W': self.work,
        }


def _line(zeta, epsilon, tau, lambda_i, lambda_f):
    if not zeta > 0:
        raise ConfigError('Требуется zeta > 0')
    rate = epsilon ** 2 / zeta
    denominator = 2 + rate * tau
    dl = lambda_f - lambda_i
    return dl * rate / denominator, lambda_i + dl / denominator, \
        dl / zeta / denominator


def _optimum(regime, zeta, epsilon, tau, lambda_i, lambda_f):
    slope, intercept, area = _line(zeta, epsilon, tau, lambda_i, lambda_f)
    if regime == OVERDAMPED:
        area = 0.0
    model = TrapModel(SpectralDensity.ohmic(zeta, epsilon), epsilon,
                      lambda_i, lambda_f, tau, regime)
    work = trap_work(model, [0.0, tau], [intercept, intercept + slope * tau],
                     area, -area)
    return TrapOptimum(slope, intercept, area, work, tau)


def analytic_optimal_ohmic(zeta, epsilon, tau, lambda_i, lambda_f):
    """
    Оптимум недодемпфированной ловушки.

    λ*(t) = λ_i + (1 + ε²t/ζ)/(2 + ε²τ/ζ)·Δλ внутри и импульсы площади
    Δλ/ζ/(2 + ε²τ/ζ). Работа считается по уравнению движения с точными
    импульсными отображениями.

    Raises:
        ConfigError: Если ζ ≤ 0.
    """
    return _optimum(UNDERDAMPED, zeta, epsilon, tau, lambda_i, lambda_f)


def analytic_optimal_overdamped(zeta, epsilon, tau, lambda_i, lambda_f):
    """Та же внутренняя прямая без импульсов, только скачки на границах."""
    return _optimum(OVERDAMPED, zeta, epsilon, tau, lambda_i, lambda_f)
