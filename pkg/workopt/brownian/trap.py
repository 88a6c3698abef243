"""
Броуновская частица в движущейся гармонической ловушке.

Среднее положение подчиняется
q̈ = −2ε∫₀ᵗΔ(t−s)q̇(s)ds − ε²q + εx, x(t) = −λ(t)/√2,
с ядром Δ = (ζ/ε)δ(t) + γξe^{−γ|t|}. Экспоненциальная часть памяти
заменяется вспомогательной переменной y = ∫₀ᵗe^{−γ(t−s)}q̇(s)ds, и
уравнение становится линейной системой ż = Az + fx.
"""

import attrs
import numpy as np

from bath import delta_weight
from core.exceptions import ConfigError

UNDERDAMPED = 'underdamped'
OVERDAMPED = 'overdamped'
REGIMES = (UNDERDAMPED, OVERDAMPED)

SQRT2 = np.sqrt(2.0)


def to_position(lam):
    return -np.asarray(lam, dtype=float) / SQRT2


@attrs.frozen
class TrapModel:
    """
    Ловушка с частотой ε и ванной J.

    Attributes:
        bath (SpectralDensity): Спектральная плотность (ohmic, drude или
            ohmic_plus_drude).
        epsilon (float): Частота осциллятора.
        lambda_i (float): Начальное положение ловушки.
        lambda_f (float): Конечное положение ловушки.
        tau (float): Длительность протокола.
        regime (str): underdamped или overdamped.
    """
    bath: object
    epsilon: float = 1.0
    lambda_i: float = 0.0
    lambda_f: float = 1.0
    tau: float = 0.5
    regime: str = UNDERDAMPED

    def __attrs_post_init__(self):
        if not self.epsilon > 0:
            raise ConfigError('Требуется epsilon > 0')
        if not self.tau > 0:
            raise ConfigError('Требуется tau > 0')
        if self.regime not in REGIMES:
            raise ConfigError(f'Неизвестный режим: {self.regime}')
        if self.bath.has_ohmic and self.bath.epsilon != self.epsilon:
            raise ConfigError('Частота ε ванны и ловушки должна совпадать')
        if self.regime == OVERDAMPED and not self.bath.has_ohmic:
            raise ConfigError(
                'Передемпфированный режим требует омической части ζ > 0'
            )

    @property
    def weight(self):
        """Вес w = ζ/ε дельта-части ядра."""
        return delta_weight(self.bath)

    @property
    def gamma(self):
        return self.bath.gamma

    @property
    def xi(self):
        return self.bath.xi if self.bath.has_drude else 0.0

    @property
    def x_i(self):
        return float(to_position(self.lambda_i))

    @property
    def x_f(self):
        return float(to_position(self.lambda_f))

    @property
    def dim(self):
        return 3 if self.regime == UNDERDAMPED else 2

    def require_origin(self):
        if self.lambda_i != 0:
            raise ConfigError('Квадратичная форма работы требует lambda_i = 0')

    def with_endpoints(self, lambda_i, lambda_f, tau=None):
        tau = self.tau if tau is None else tau
        return attrs.evolve(self, lambda_i=lambda_i, lambda_f=lambda_f,
                            tau=tau)

    def state_matrix(self):
        """
        Матрица A системы ż = Az + fx.

        underdamped: z = (q, q̇, y); overdamped: z = (q, y), где уравнение
        2∫Δq̇ = −εq + x разрешено относительно q̇.
        """
        eps, w, g, xi = self.epsilon, self.weight, self.gamma, self.xi
        if self.regime == UNDERDAMPED:
            return np.array([
                [0.0, 1.0, 0.0],
                [-eps ** 2, -eps * w, -2 * eps * g * xi],
                [0.0, 1.0, -g],
            ])
        return np.array([
            [-eps / w, -2 * g * xi / w],
            [-eps / w, -2 * g * xi / w - g],
        ])

    def forcing(self):
        if self.regime == UNDERDAMPED:
            return np.array([0.0, self.epsilon, 0.0])
        w = self.weight
        return np.array([1 / w, 1 / w])

    def initial_state(self):
        """Равновесие при λ_i: q₀ = −λ_i/(√2ε), q̇₀ = 0, y₀ = 0."""
        z = np.zeros(self.dim)
        z[0] = self.x_i / self.epsilon
        return z
