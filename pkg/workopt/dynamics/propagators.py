"""
Релаксация к стационарному состоянию и распространение по протоколу.
"""

import logging

import numpy as np
import scipy.sparse as sp
from scipy.sparse.linalg import spsolve

from core.exceptions import EquilibrationError, PropagationError
from protocols import evaluate, sample_on_grid
from system import gibbs_state, min_eigenvalue

from .integrators import rk4_step
from .linear import UnitPropagator
from .solvers import TCL2
from .trajectory import Trajectory

logger = logging.getLogger(__name__)

POSITIVITY_TOL = 1e-10


def equilibrate(solver, lam=None, tol=1e-12, t_max=1e3):
    """
    Релаксация при фиксированном λ из факторизованного состояния.

    Начальное ρ_S равно состоянию Гиббса H_S(λ). После переходного процесса
    решателя (для TCL2 это выход Cₖ на стационар) состояние переносится
    точным пропагатором генератора на единицу времени, пока изменение ρ_S
    за единицу времени не станет меньше tol.

    Args:
        solver (Solver): Решатель.
        lam (float | None): Значение λ, по умолчанию λ_i.
        tol (float): Порог стационарности по max-норме.
        t_max (float): Предельное время релаксации.

    Raises:
        EquilibrationError: Если порог не достигнут за t_max.

    Returns:
        numpy.ndarray: Полное состояние решателя, задающее t = 0 процесса.
    """
    model = solver.model
    lam = model.lambda_i if lam is None else lam
    y = solver.initial(gibbs_state(model, lam, solver.beta))
    if solver.expansion.is_decoupled:
        return y
    x, elapsed = solver.settle(y, lam, tol, t_max)
    matrix, offset = solver.generator(lam)
    step = UnitPropagator(matrix, offset)
    residual = np.inf
    while elapsed < t_max:
        x_next = step(x)
        residual = float(np.max(np.abs(solver.reduced(x_next)
                                       - solver.reduced(x))))
        x = x_next
        elapsed += 1.0
        if residual < tol:
            logger.info('%s: стационарность за t=%g (изменение %.2e)',
                        solver.method, elapsed, residual)
            return solver.embed(x, lam)
    raise EquilibrationError(
        f'{solver.method}: стационарность не достигнута за t={t_max:g}, '
        f'последнее изменение {residual:.2e}',
        residual=residual, elapsed=elapsed,
    )


def steady_state(solver, lam):
    """
    Стационарное состояние генератора при фиксированном λ прямым решением.

    Первое уравнение заменяется условием tr ρ_S = 1.

    Returns:
        numpy.ndarray: Полное стационарное состояние решателя.
    """
    model = solver.model
    if solver.expansion.is_decoupled:
        return solver.initial(gibbs_state(model, lam, solver.beta))
    matrix, offset = solver.generator(lam)
    system = matrix.tolil()
    system[0, :] = 0
    system[0, 0] = 1.0
    system[0, 3] = 1.0
    rhs = -offset.copy()
    rhs[0] = 1.0
    x = spsolve(sp.csc_matrix(system), rhs)
    return solver.embed(np.asarray(x, dtype=complex), lam)


def propagate(solver, y0, protocol, dt):
    """
    Распространение методом Рунге-Кутты четвертого порядка с шагом dt.

    λ на стадиях берется из точной функции протокола в моменты t, t + dt/2,
    t + dt. Производная ρ̇_S(tₙ) сохраняется из первой стадии.

    Args:
        solver (Solver): Решатель.
        y0 (numpy.ndarray): Начальное состояние из equilibrate.
        protocol (Protocol): Протокол λ(t).
        dt (float): Шаг.

    Raises:
        GridMismatch: Если dt не согласован с τ или δ.
        PropagationError: При появлении нечисловых значений.

    Returns:
        Trajectory: Траектория на сетке.
    """
    times, lambdas = sample_on_grid(protocol, dt)
    n = len(times)
    states = np.empty((n, 2, 2), dtype=complex)
    derivatives = np.empty((n, 2, 2), dtype=complex)
    min_eigs = np.empty(n)

    def func(t, y):
        return solver.rhs(evaluate(protocol, t), y)

    y = np.asarray(y0, dtype=complex)
    k1 = solver.rhs(lambdas[0], y)
    for i in range(n):
        if not (np.all(np.isfinite(y)) and np.all(np.isfinite(k1))):
            raise PropagationError(
                f'{solver.method}: нечисловое состояние на шаге {i}', step=i
            )
        states[i] = solver.reduced(y)
        derivatives[i] = solver.reduced(k1)
        min_eigs[i] = min_eigenvalue(states[i])
        if i == n - 1:
            break
        y = rk4_step(func, times[i], y, dt, k1)
        k1 = solver.rhs(lambdas[i + 1], y)
    worst = float(min_eigs.min())
    if worst < -POSITIVITY_TOL:
        level = logging.WARNING if solver.method == TCL2 else logging.ERROR
        logger.log(level, '%s: нарушение положительности, мин. собств. '
                   'значение %.3e', solver.method, worst)
    metadata = {**solver.metadata, 'dt': dt, 'tau': protocol.tau}
    return Trajectory(times, lambdas, states, derivatives, min_eigs,
                      solver.method, metadata, y)
