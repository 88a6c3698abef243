"""
Метод Нелдера-Мида с журналом вычислений целевой функции.

Используется классический вариант scipy (коэффициенты 1, 2, 0.5, 0.5,
adaptive=False). Остановка: диаметр симплекса < xatol и разброс значений
< fatol, либо исчерпан max_iter.
"""

import logging

import attrs
import numpy as np
from scipy.optimize import minimize

from core.exceptions import ConfigError, NonFiniteObjective

logger = logging.getLogger(__name__)


def _positive(instance, attribute, value):
    if not value > 0:
        raise ConfigError(
            f'{attribute.name} должен быть > 0, получено {value}')


@attrs.frozen
class OptimizerConfig:
    """
    Параметры оптимизатора.

    Attributes:
        xatol (float): Допуск по параметрам.
        fatol (float): Допуск по целевой функции.
        max_iter (int): Предельное число итераций.
        simplex_scale (float): Относительный шаг начального симплекса.
        simplex_min_step (float): Минимальный шаг начального симплекса.
        restarts (int): Число случайных перезапусков для B-F.
        seed (int): Зерно генератора для перезапусков.
    """
    xatol: float = attrs.field(default=1e-2, validator=_positive)
    fatol: float = attrs.field(default=1e-10, validator=_positive)
    max_iter: int = 2000
    simplex_scale: float = attrs.field(default=0.05, validator=_positive)
    simplex_min_step: float = attrs.field(default=0.1, validator=_positive)
    restarts: int = 0
    seed: int = 0

    def __attrs_post_init__(self):
        if self.max_iter < 1:
            raise ConfigError('max_iter должен быть >= 1')
        if self.restarts < 0:
            raise ConfigError('restarts должен быть >= 0')

    def initial_simplex(self, x0):
        """x0 и вершины со сдвигом max(min_step, scale·|x0ᵢ|) по каждой оси."""
        x0 = np.asarray(x0, dtype=float)
        steps = np.maximum(self.simplex_min_step,
                           self.simplex_scale * np.abs(x0))
        return np.vstack([x0, x0 + np.diag(steps)])


@attrs.define
class ObjectiveLog:
    """
    Обертка целевой функции: журнал вычислений и кэш по вектору параметров.
    """
    func: object
    evaluations: list = attrs.Factory(list)
    _cache: dict = attrs.Factory(dict)

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        key = x.tobytes()
        if key in self._cache:
            return self._cache[key]
        value = float(self.func(x))
        if np.isnan(value):
            raise NonFiniteObjective(
                f'Целевая функция вернула NaN в точке {x.tolist()}', x=x
            )
        self._cache[key] = value
        self.evaluations.append((x.copy(), value))
        return value

    @property
    def best(self):
        return min(self.evaluations, key=lambda item: item[1])


@attrs.define
class OptimizationResult:
    """
    Результат оптимизации.

    Attributes:
        x (numpy.ndarray): Лучшие параметры.
        fun (float): Лучшее значение.
        nit (int): Число итераций.
        nfev (int): Число различных вычислений целевой функции.
        converged (bool): Достигнуты ли допуски.
        evaluations (list): Журнал (x, f).
        seed (int | None): Зерно случайного начального приближения.
        message (str): Сообщение оптимизатора.
    """
    x: np.ndarray
    fun: float
    nit: int
    nfev: int
    converged: bool
    evaluations: list = attrs.Factory(list)
    seed: int = None
    message: str = ''

    def summary(self):
        return {
            'x': [float(v) for v in self.x],
            'fun': self.fun,
            'nit': self.nit,
            'nfev': self.nfev,
            'converged': self.converged,
            'seed': self.seed,
            'message': self.message,
        }


def nelder_mead(objective, x0, cfg, max_iter=None, seed=None):
    """
    Минимизация objective симплекс-методом Нелдера-Мида.

    Args:
        objective (callable): Функция параметров.
        x0 (array_like): Начальное приближение.
        cfg (OptimizerConfig): Допуски и шаги начального симплекса.
        max_iter (int | None): Переопределение cfg.max_iter.
        seed (int | None): Записывается в результат.

    Raises:
        NonFiniteObjective: Если целевая функция вернула NaN.

    Returns:
        OptimizationResult: Лучшая точка и журнал.
    """
    log = ObjectiveLog(objective)
    x0 = np.asarray(x0, dtype=float)
    log(x0)
    res = minimize(
        log, x0, method='Nelder-Mead',
        options={
            'xatol': cfg.xatol,
            'fatol': cfg.fatol,
            'maxiter': max_iter or cfg.max_iter,
            'initial_simplex': cfg.initial_simplex(x0),
            'adaptive': False,
        },
    )
    best_x, best_f = log.best
    logger.info('Нелдер-Мид: f=%.10g за %d итераций (%d вычислений), %s',
                best_f, res.nit, len(log.evaluations), res.message)
    return OptimizationResult(best_x, best_f, int(res.nit),
                              len(log.evaluations), bool(res.success),
                              log.evaluations, seed, str(res.message))
