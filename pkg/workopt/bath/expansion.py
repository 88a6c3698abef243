"""
Экспоненциальное разложение корреляционной функции

    L(t) = Σₖ dₖ e^{−zₖt} + 2η δ(t),

общее для всех пропагаторов.
"""

import logging

import attrs
import numpy as np

from core.exceptions import ConfigError, FitFailure, NonIntegrableSpectrum

from .correlation import correlation_exact

logger = logging.getLogger(__name__)

PAIR_TOL = 1e-12
POLE_COLLISION_TOL = 1e-8


@attrs.frozen
class ExpansionTerm:
    """
    Одно слагаемое разложения.

    Attributes:
        d (complex): Амплитуда dₖ.
        d_conj (complex): Амплитуда d′ₖ сопряженного ряда.
        z (complex): Скорость затухания zₖ, Re zₖ > 0.
    """
    d: complex
    d_conj: complex
    z: complex


@attrs.frozen
class ExponentialExpansion:
    """
    Разложение L(t) по затухающим экспонентам.

    Attributes:
        terms (tuple[ExpansionTerm]): Слагаемые разложения.
        eta (float): Вес η марковского δ-слагаемого.
        beta (float): Обратная температура.
        fit_error (float): Относительная sup-невязка относительно точной L(t).
    """
    terms: tuple = attrs.field(converter=tuple)
    eta: float = 0.0
    beta: float = 1.0
    fit_error: float = 0.0

    def __attrs_post_init__(self):
        for term in self.terms:
            if not np.real(term.z) > 0:
                raise ConfigError('Все скорости zₖ должны иметь Re zₖ > 0')

    @classmethod
    def from_amplitudes(cls, d, z, eta=0.0, beta=1.0, fit_error=0.0):
        """
        Собирает разложение, находя пары zⱼ = conj(zₖ).

        Тогда d′ₖ = conj(d_{p(k)}), где p(k) есть индекс сопряженной скорости.
        """
        d = np.asarray(d, dtype=complex)
        z = np.asarray(z, dtype=complex)
        terms = []
        for k, zk in enumerate(z):
            gaps = np.abs(z - np.conj(zk))
            j = int(np.argmin(gaps))
            if gaps[j] > PAIR_TOL * max(1.0, abs(zk)):
                raise ConfigError(
                    f'Скорость {zk} не имеет комплексно-сопряженной пары'
                )
            terms.append(ExpansionTerm(complex(d[k]), complex(np.conj(d[j])),
                                       complex(zk)))
        return cls(terms, eta=float(eta), beta=float(beta),
                   fit_error=float(fit_error))

    @classmethod
    def decoupled(cls, beta=1.0):
        return cls((), eta=0.0, beta=beta)

    @property
    def K(self):
        return len(self.terms)

    @property
    def is_decoupled(self):
        return self.K == 0 and self.eta == 0

    @property
    def d(self):
        return np.array([term.d for term in self.terms], dtype=complex)

    @property
    def d_conj(self):
        return np.array([term.d_conj for term in self.terms], dtype=complex)

    @property
    def z(self):
        return np.array([term.z for term in self.terms], dtype=complex)

    def evaluate(self, t):
        """Σₖ dₖ e^{−zₖt} на массиве времен t > 0."""
        t = np.asarray(t, dtype=float)
        return np.exp(-np.multiply.outer(t, self.z)) @ self.d

    def evaluate_conjugate(self, t):
        """Σₖ d′ₖ e^{−zₖt}; совпадает с сопряжением evaluate."""
        t = np.asarray(t, dtype=float)
        return np.exp(-np.multiply.outer(t, self.z)) @ self.d_conj

    def spectrum(self, omega):
        """
        Фурье-образ L̂(ω) = ∫ L(t) e^{iωt} dt по всей оси.

        Использует L(−t) = conj L(t):
        L̂(ω) = Σₖ [dₖ/(zₖ − iω) + d′ₖ/(zₖ + iω)] + 2η.
        """
        w = np.asarray(omega, dtype=float)
        z = self.z
        value = (self.d / (z - 1j * w[..., None])
                 + self.d_conj / (z + 1j * w[..., None])).sum(axis=-1)
        return value + 2 * self.eta

    def halfline(self, omega):
        return halfline_transform(self, omega)


def halfline_transform(exp, omega):
    """
    Полуосевое преобразование d(ω) = ∫₀^∞ dt Re[L(t)] e^{iωt}.

    Re L(t) = ½Σₖ(dₖ + d′ₖ)e^{−zₖt}; δ-слагаемое на границе дает η.

    Args:
        exp (ExponentialExpansion): Разложение.
        omega (float | numpy.ndarray): Частота.

    Returns:
        complex | numpy.ndarray: d(ω).
    """
    w = np.asarray(omega, dtype=float)
    weights = 0.5 * (exp.d + exp.d_conj)
    value = (weights / (exp.z - 1j * w[..., None])).sum(axis=-1) + exp.eta
    if value.ndim == 0:
        return complex(value)
    return value


def _matsubara_tail(J, beta, n):
    """Σ_{k>n} 1/(νₖ² − γ²) через замкнутую сумму по всем k."""
    a = beta * J.gamma / (2 * np.pi)
    full = (beta / (2 * np.pi)) ** 2 * (
        1 / (2 * a ** 2) - np.pi / np.tan(np.pi * a) / (2 * a)
    )
    nu = 2 * np.pi * np.arange(1, n + 1) / beta
    return full - np.sum(1 / (nu ** 2 - J.gamma ** 2))


def matsubara_expansion(J, beta, n):
    """
    Разложение Мацубары для ванны Друде.

    Полюс z₀ = γ с d₀ = (γ²ξ/2)(cot(βγ/2) − i) и n мацубаровских
    слагаемых zₖ = νₖ = 2πk/β с dₖ = (2γ²ξ/β)νₖ/(νₖ² − γ²). Отброшенный
    хвост свернут в η = Σ_{k>n} dₖ/νₖ.

    Args:
        J (SpectralDensity): Ванна Друде.
        beta (float): Обратная температура.
        n (int): Число мацубаровских слагаемых.

    Raises:
        NonIntegrableSpectrum: Если J содержит омическую часть.
        FitFailure: Если полюс γ совпадает с частотой Мацубары.

    Returns:
        ExponentialExpansion: Разложение из n + 1 слагаемых.
    """
    if J.has_ohmic:
        raise NonIntegrableSpectrum(
            'Разложение омической ванны по экспонентам не существует'
        )
    if not beta > 0:
        raise ConfigError('Требуется beta > 0')
    if not J.has_drude or J.xi == 0:
        return ExponentialExpansion.decoupled(beta)
    gamma, xi = J.gamma, J.xi
    ratio = beta * gamma / (2 * np.pi)
    if abs(ratio - round(ratio)) < POLE_COLLISION_TOL * max(1.0, ratio):
        raise FitFailure(
            f'Полюс γ={gamma} совпадает с частотой Мацубары при β={beta}',
            residual=np.inf,
        )
    prefactor = 2 * gamma ** 2 * xi / beta
    nu = 2 * np.pi * np.arange(1, n + 1) / beta
    d = np.concatenate((
        [0.5 * gamma ** 2 * xi * (1 / np.tan(0.5 * beta * gamma) - 1j)],
        prefactor * nu / (nu ** 2 - gamma ** 2),
    ))
    z = np.concatenate(([gamma], nu))
    eta = prefactor * _matsubara_tail(J, beta, n)
    return ExponentialExpansion.from_amplitudes(d, z, eta=eta, beta=beta)


def fit_grid(J, beta, n_points):
    """Сетка t ∈ [min(β, 1)/2, max(10/γ, 2β, 20)] для проверки разложения."""
    t_min = 0.5 * min(beta, 1.0)
    t_fit = max(10.0 / J.gamma, 2.0 * beta, 20.0)
    return np.linspace(t_min, t_fit, n_points)


def fit_residual(exp, grid, exact):
    scale = np.max(np.abs(exact))
    if scale == 0:
        return 0.0
    return float(np.max(np.abs(exp.evaluate(grid) - exact)) / scale)


def expand_correlation(J, beta, tol=1e-3, k_max=12, n_points=2000):
    """
    Подбирает разложение с наименьшим числом слагаемых, достигающее tol.

    Число слагаемых K перебирается от 1 (только полюс Друде) до k_max,
    невязка считается по точной L(t) на сетке fit_grid.

    Args:
        J (SpectralDensity): Спектральная плотность.
        beta (float): Обратная температура.
        tol (float): Допуск относительной sup-невязки.
        k_max (int): Максимальное число слагаемых.
        n_points (int): Число точек сетки.

    Raises:
        FitFailure: Если допуск не достигнут при k_max слагаемых.

    Returns:
        ExponentialExpansion: Разложение с заполненным fit_error.
    """
    if not (beta > 0 and tol > 0 and k_max >= 1):
        raise ConfigError('Требуется beta > 0, tol > 0, k_max >= 1')
    if J.has_ohmic:
        raise NonIntegrableSpectrum(
            'Омическая спектральная плотность не дает конечной L(t)'
        )
    if not J.has_drude or J.xi == 0:
        return ExponentialExpansion.decoupled(beta)
    grid = fit_grid(J, beta, n_points)
    exact = np.array([correlation_exact(J, beta, float(t)) for t in grid])
    best = np.inf
    for k in range(1, k_max + 1):
        exp = matsubara_expansion(J, beta, k - 1)
        residual = fit_residual(exp, grid, exact)
        best = min(best, residual)
        logger.debug('K=%d: невязка %.3e', k, residual)
        if residual <= tol:
            logger.info('Разложение для %s, β=%g: K=%d, невязка %.3e, η=%.4g',
                        J, beta, k, residual, exp.eta)
            return attrs.evolve(exp, fit_error=residual)
    raise FitFailure(
        f'Невязка {best:.3e} больше допуска {tol:g} при K={k_max}',
        residual=best,
    )
