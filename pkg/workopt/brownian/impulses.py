"""
IMP3 с дельта-импульсами: λ(t) = α₁t + α₂ + 2m[δ(t) − δ(t−τ)].

Работа является квадратичной функцией p = (α₁, α₂, m) с линейной и постоянной
частью от закрепленных концов. Коэффициенты находятся поляризацией
точной работы во временной области, параметры находятся из ∂W/∂p = 0.
"""

import logging

import numpy as np

from core.exceptions import DegenerateAnsatz

from .analytic import TrapOptimum
from .trap import OVERDAMPED
from .work import trap_work

logger = logging.getLogger(__name__)

CONDITION_LIMIT = 1e12


def imp3_delta_work(model, alpha1, alpha2, area):
    """Работа IMP3 с импульсами площади area в 0 и −area в τ."""
    tau = model.tau
    return trap_work(model, [0.0, tau], [alpha2, alpha1 * tau + alpha2],
                     area, -area)


def _quadratic_coefficients(func, size):
    c0 = func(np.zeros(size))
    eye = np.eye(size)
    plus = np.array([func(e) for e in eye])
    minus = np.array([func(-e) for e in eye])
    linear = 0.5 * (plus - minus)
    quad = np.diag(0.5 * (plus + minus) - c0)
    for i in range(size):
        for j in range(i + 1, size):
            quad[i, j] = quad[j, i] = 0.5 * (
                func(eye[i] + eye[j]) - plus[i] - plus[j] + c0
            )
    return quad, linear


def imp3_delta_optimal(model):
    """
    Оптимальные (α₁, α₂, m) для ловушки.

    В передемпфированном режиме импульсы дают бесконечную работу, поэтому
    m = 0 и оптимизация идет по (α₁, α₂).

    Работа квадратична по p = (α₁, α₂, m): W = pᵀAp + bᵀp + W₀. A и b
    находятся поляризацией работы во временной области по базисным
    направлениям. Это равносильно их сборке из интегралов ядра памяти по
    базисным функциям {t, 1, δ}: для квадратичной W поляризация восстанавливает
    коэффициенты точно. Минимум дает 2Ap = −b.

    Raises:
        DegenerateAnsatz: Если система стационарности вырождена.

    Returns:
        TrapOptimum: slope = α₁, intercept = α₂, area = m и W*.
    """
    size = 2 if model.regime == OVERDAMPED else 3

    def func(p):
        area = p[2] if size == 3 else 0.0
        return imp3_delta_work(model, p[0], p[1], area)

    quad, linear = _quadratic_coefficients(func, size)
    if np.linalg.cond(quad) > CONDITION_LIMIT:
        raise DegenerateAnsatz('Вырожденная система для параметров IMP3')
    p = np.linalg.solve(2 * quad, -linear)
    area = float(p[2]) if size == 3 else 0.0
    work = imp3_delta_work(model, p[0], p[1], area)
    logger.info('IMP3 с дельта-импульсами: α₁=%.8g, α₂=%.8g, m=%.8g, '
                'W*=%.10g', p[0], p[1], area, work)
    return TrapOptimum(float(p[0]), float(p[1]), area, work, model.tau)
