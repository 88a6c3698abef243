"""
Работа как квадратичная форма по x(t) = −λ(t)/√2 при λ_i = 0:

W[x] = ∫₀^τdt∫₀^tds A(t−s)x(t)x(s) − ∫₀^τdt b(t)x(t),

недодемпфированный режим: A = εĠ₊, b = x(τ)εG₊(τ−t);
передемпфированный: A = Ḟ + 2F(0)δ(t−s), b = x(τ)F(τ−t).
"""

import logging

import attrs
import numpy as np
from scipy.linalg import LinAlgError, cho_factor, cho_solve, toeplitz

from core.exceptions import IndefiniteHessian
from protocols import time_grid

from .kernels import green_plus, overdamped_kernel
from .trap import SQRT2, UNDERDAMPED

logger = logging.getLogger(__name__)


@attrs.frozen
class QuadraticWork:
    """
    Дискретизация формы работы на равномерной сетке.

    Attributes:
        times (numpy.ndarray): Узлы nδ_g.
        kernel (numpy.ndarray): A(nδ_g), n = 0..N.
        source (numpy.ndarray): b(tₙ).
        step (float): Шаг δ_g.
        diagonal (float): Вес F(0) локальной части ядра.
        x_i (float): Закрепленное x(0).
        x_f (float): Закрепленное x(τ).
    """
    times: np.ndarray
    kernel: np.ndarray
    source: np.ndarray
    step: float
    diagonal: float
    x_i: float
    x_f: float

    @classmethod
    def build(cls, model, step):
        model.require_origin()
        times = time_grid(model.tau, step)
        if model.regime == UNDERDAMPED:
            g, g_dot = green_plus(model, times)
            kernel = model.epsilon * g_dot
            response = model.epsilon * g[::-1]
            diagonal = 0.0
        else:
            f = overdamped_kernel(model)
            kernel = f.derivative(times)
            response = f(model.tau - times)
            diagonal = f.initial
        source = cls.weights(len(times), step) * model.x_f * response
        return cls(times, kernel, source, step, diagonal, model.x_i,
                   model.x_f)

    @staticmethod
    def weights(size, step):
        w = np.full(size, step)
        w[[0, -1]] *= 0.5
        return w

    def hessian(self):
        """
        Симметризованная матрица S формы: W ≈ xᵀSx − bᵀx.

        Внутренний и внешний интегралы берутся по формуле трапеций.
        """
        size = len(self.times)
        matrix = toeplitz(self.kernel, np.zeros(size))
        matrix *= self.step
        matrix[:, 0] *= 0.5
        matrix[np.diag_indices(size)] *= 0.5
        matrix[0, :] = 0.0
        w = self.weights(size, self.step)
        matrix *= w[:, None]
        matrix[np.diag_indices(size)] += self.diagonal * w
        matrix += matrix.T
        matrix *= 0.5
        return matrix

    def evaluate(self, x, hessian=None):
        x = np.asarray(x, dtype=float)
        hessian = self.hessian() if hessian is None else hessian
        return float(x @ hessian @ x - self.source @ x)

    def solve(self):
        """
        Стационарная точка по внутренним узлам.

        Raises:
            IndefiniteHessian: Если S на внутренних узлах не положительно
                определена.

        Returns:
            tuple[numpy.ndarray, float]: x во всех узлах и W*.
        """
        hessian = self.hessian()
        inner = hessian[1:-1, 1:-1]
        rhs = (0.5 * self.source[1:-1] - hessian[1:-1, 0] * self.x_i
               - hessian[1:-1, -1] * self.x_f)
        try:
            factor = cho_factor(inner)
        except LinAlgError as exc:
            raise IndefiniteHessian(
                f'Квадратичная форма не положительно определена при '
                f'δ_g={self.step:g}; уменьшите шаг'
            ) from exc
        x = np.concatenate(([self.x_i], cho_solve(factor, rhs), [self.x_f]))
        return x, self.evaluate(x, hessian)


@attrs.frozen
class QpOptimum:
    """
    Глобальный оптимум на сетке.

    Attributes:
        times (numpy.ndarray): Узлы.
        lambdas (numpy.ndarray): λ*(tₙ), концы равны λ_i и λ_f.
        work (float): W* по квадратичной форме.
        step (float): Шаг δ_g.
    """
    times: np.ndarray
    lambdas: np.ndarray
    work: float
    step: float

    @property
    def scale(self):
        """Λ = max|λ*|."""
        return float(np.max(np.abs(self.lambdas)))

    def rows(self):
        for t, lam in zip(self.times, self.lambdas):
            yield {'t': t, 'lambda': lam}


def qp_optimal_protocol(model, step):
    """
    Глобальный оптимум ловушки решением линейной системы стационарности.

    Args:
        model (TrapModel): Ловушка с λ_i = 0.
        step (float): Шаг сетки δ_g.

    Returns:
        QpOptimum: Протокол и W*.
    """
    form = QuadraticWork.build(model, step)
    x, work = form.solve()
    optimum = QpOptimum(form.times, -SQRT2 * x, work, step)
    logger.info('Оптимум КП (%s, δ_g=%g): W*=%.10g, Λ=%.4g', model.regime,
                step, work, optimum.scale)
    return optimum
