"""
Минимизация работы W_τ[λ] по параметрам анзаца.
"""

import logging

import attrs
import numpy as np

from core.exceptions import ConfigError, PropagationError
from protocols import (SAWTOOTH, HeightScale, Linear, PiecewiseLinear, Poly3,
                       imp3_initial_guess)

from .simplex import nelder_mead

logger = logging.getLogger(__name__)

LINEAR = 'linear'
IMP3 = 'imp3'
POLY3 = 'poly3'
PIECEWISE_LINEAR = 'piecewise_linear'
KINDS = (LINEAR, IMP3, POLY3, PIECEWISE_LINEAR)

RESTART_RANGE = (-10.0, 10.0)


@attrs.define
class ProtocolOptimum:
    """
    Оптимальный протокол одного семейства.

    Attributes:
        protocol (Protocol): Лучший протокол.
        report (WorkReport): Отчет о работе лучшего протокола.
        result (OptimizationResult | None): Результат оптимизатора; для
            линейного протокола отсутствует.
        restarts (list): Результаты случайных перезапусков B-F.
        seed_work (float | None): Работа начального приближения.
    """
    protocol: object
    report: object
    result: object = None
    restarts: list = attrs.Factory(list)
    seed_work: float = None

    def summary(self):
        data = {
            'protocol': self.protocol.describe(),
            'W': self.report.W,
            'dF': self.report.delta_f,
            'W_ex': self.report.excess_work,
            'seed_work': self.seed_work,
            'metadata': self.report.metadata,
        }
        if self.result is not None:
            data['optimizer'] = self.result.summary()
        if self.restarts:
            data['restarts'] = [r.summary() for r in self.restarts]
        return data


class _Family:
    """Параметризация семейства: начальная точка и отображение x → протокол."""

    def __init__(self, template, x0, to_protocol):
        self.template = template
        self.x0 = np.asarray(x0, dtype=float)
        self.to_protocol = to_protocol


def _imp3_family(m, solver, tau, delta, shape):
    guess = imp3_initial_guess(m, solver.bath, solver.beta, tau, delta)
    template = guess.protocol(m, tau, delta, shape)
    scale = HeightScale.for_guess(guess, m.lambda_i, delta)
    return _Family(
        template,
        scale.to_normalized(template.parameters()),
        lambda x: template.with_parameters(scale.to_height(x)),
    )


def _poly3_family(m, tau):
    template = Poly3(m.lambda_i, m.lambda_f, tau)
    return _Family(template, np.zeros(3), template.with_parameters)


def _piecewise_family(seed, delta):
    template = PiecewiseLinear.from_protocol(seed, delta)
    return _Family(template, template.parameters(), template.with_parameters)


def _objective(evaluator, family):
    def objective(x):
        protocol = family.to_protocol(x)
        try:
            return evaluator.work(protocol)
        except PropagationError as exc:
            logger.warning('Сбой распространения в точке %s: %s',
                           np.asarray(x).tolist(), exc)
            return np.inf
    return objective


def optimize_protocol(kind, evaluator, tau, cfg, delta=1e-2, shape=SAWTOOTH,
                      seed_protocol=None, max_iter=None):
    """
    Оптимизация протокола заданного семейства.

    IMP3 оптимизируется по (h′, α₁, α₂) из imp3_initial_guess, POLY3 из
    нулевых коэффициентов, B-F из оптимума IMP3 (или seed_protocol) с
    необязательными случайными перезапусками на [−10, 10].

    Args:
        kind (str): linear, imp3, poly3 или piecewise_linear.
        evaluator (WorkEvaluator): Вычислитель работы.
        tau (float): Длительность протокола.
        cfg (OptimizerConfig): Параметры оптимизатора.
        delta (float): Ширина импульса IMP3 и шаг узлов B-F.
        shape (str): Форма импульса IMP3.
        seed_protocol (Protocol | None): Начальный протокол для B-F.
        max_iter (int | None): Переопределение cfg.max_iter.

    Raises:
        ConfigError: Для неизвестного семейства.

    Returns:
        ProtocolOptimum: Лучший протокол с отчетом.
    """
    solver = evaluator.solver
    m = solver.model
    if kind == LINEAR:
        protocol = Linear(m.lambda_i, m.lambda_f, tau)
        return ProtocolOptimum(protocol, evaluator.report(protocol))
    if kind == IMP3:
        family = _imp3_family(m, solver, tau, delta, shape)
    elif kind == POLY3:
        family = _poly3_family(m, tau)
    elif kind == PIECEWISE_LINEAR:
        if seed_protocol is None:
            seed_protocol = optimize_protocol(
                IMP3, evaluator, tau, cfg, delta, shape).protocol
        family = _piecewise_family(seed_protocol, delta)
    else:
        raise ConfigError(f'Неизвестное семейство протоколов: {kind}')

    objective = _objective(evaluator, family)
    logger.info('Оптимизация %s: τ=%g, %d параметров', kind, tau,
                len(family.x0))
    result = nelder_mead(objective, family.x0, cfg, max_iter)
    seed_work = result.evaluations[0][1]

    restarts = []
    if kind == PIECEWISE_LINEAR and cfg.restarts:
        restarts = random_restarts(objective, len(family.x0), cfg, max_iter)
        best_restart = min(restarts, key=lambda r: r.fun)
        logger.info('Лучший случайный перезапуск: %.10g (из IMP3: %.10g)',
                    best_restart.fun, result.fun)

    best = min([result, *restarts], key=lambda r: r.fun)
    protocol = family.to_protocol(best.x)
    return ProtocolOptimum(protocol, evaluator.report(protocol), result,
                           restarts, seed_work)


def random_restarts(objective, size, cfg, max_iter=None):
    """
    Перезапуски из равномерно случайных узлов на [−10, 10].

    Зерно i-го перезапуска равно cfg.seed + i и сохраняется в результате.
    """
    results = []
    for i in range(cfg.restarts):
        seed = cfg.seed + i
        rng = np.random.default_rng(seed)
        x0 = rng.uniform(*RESTART_RANGE, size=size)
        results.append(nelder_mead(objective, x0, cfg, max_iter, seed=seed))
    return results
