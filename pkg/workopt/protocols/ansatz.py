"""
Анзацы управляющего поля λ(t) на [0, τ].

Вне отрезка λ(t < 0) = λ_i и λ(t > τ) = λ_f. На самом отрезке, включая
концы, возвращается значение внутренней ветви: λ(0) означает λ(0⁺),
λ(τ) означает λ(τ⁻).
"""

import attrs
import numpy as np

from core.exceptions import InvalidAnsatz

from .grid import steps_per, time_grid

EDGE_RTOL = 1e-12

SAWTOOTH = 'sawtooth'
TRIANGLE = 'triangle'
IMPULSE_SHAPES = (SAWTOOTH, TRIANGLE)


@attrs.frozen
class Protocol:
    """
    Базовый протокол с общим контекстом.

    Attributes:
        lambda_i (float): Значение до начала процесса.
        lambda_f (float): Значение после окончания процесса.
        tau (float): Длительность процесса.
    """
    lambda_i: float
    lambda_f: float
    tau: float

    kind = 'base'
    parameter_names = ()

    def __attrs_post_init__(self):
        if not self.tau > 0:
            raise InvalidAnsatz('Требуется tau > 0')

    @property
    def delta_lambda(self):
        return self.lambda_f - self.lambda_i

    def linear(self, t):
        return self.lambda_i + self.delta_lambda * t / self.tau

    def interior(self, t):
        raise NotImplementedError

    def __call__(self, t):
        return evaluate(self, t)

    def parameters(self):
        return np.array([], dtype=float)

    def with_parameters(self, x):
        return self

    def describe(self):
        """Словарь для JSON-сводок."""
        data = {
            'kind': self.kind,
            'lambda_i': self.lambda_i,
            'lambda_f': self.lambda_f,
            'tau': self.tau,
        }
        data.update(zip(self.parameter_names,
                        (float(v) for v in self.parameters())))
        return data


@attrs.frozen
class Constant(Protocol):
    value: float = 0.0

    kind = 'constant'

    @classmethod
    def of(cls, value, tau):
        return cls(value, value, tau, value)

    def interior(self, t):
        return np.full_like(t, self.value)


@attrs.frozen
class Linear(Protocol):
    kind = 'linear'

    def interior(self, t):
        return self.linear(t)


@attrs.frozen
class Imp3(Protocol):
    """
    Импульсный анзац IMP3.

    Внутренняя прямая α₁t + α₂ и пара зеркальных импульсов ширины δ с
    площадью ±h·δ. Форма sawtooth: скачок до прямой + 2h в 0⁺ и линейный
    спад к прямой в t = δ; форма triangle: равнобедренный треугольник с
    вершиной 2h в t = δ/2.
    """
    h: float = 0.0
    alpha1: float = 0.0
    alpha2: float = 0.0
    delta: float = 1e-2
    shape: str = SAWTOOTH

    kind = 'imp3'
    parameter_names = ('h', 'alpha1', 'alpha2')

    def __attrs_post_init__(self):
        super().__attrs_post_init__()
        if not self.delta > 0:
            raise InvalidAnsatz('Требуется delta > 0')
        if self.tau < 2 * self.delta:
            raise InvalidAnsatz(
                f'IMP3 требует tau >= 2*delta, получено tau={self.tau:g}, '
                f'delta={self.delta:g}'
            )
        if self.shape not in IMPULSE_SHAPES:
            raise InvalidAnsatz(f'Неизвестная форма импульса: {self.shape}')

    def profile(self, u):
        """Форма импульса на u ∈ [0, 1] с единичной площадью."""
        u = np.clip(u, 0.0, 1.0)
        if self.shape == SAWTOOTH:
            return 2.0 * (1.0 - u)
        return 2.0 * (1.0 - np.abs(2.0 * u - 1.0))

    def interior(self, t):
        value = self.alpha1 * t + self.alpha2
        head = t < self.delta
        tail = t > self.tau - self.delta
        value = value + np.where(head, self.h * self.profile(t / self.delta),
                                 0.0)
        value = value - np.where(
            tail, self.h * self.profile((self.tau - t) / self.delta), 0.0
        )
        return value

    def parameters(self):
        return np.array([self.h, self.alpha1, self.alpha2], dtype=float)

    def with_parameters(self, x):
        h, alpha1, alpha2 = (float(v) for v in x)
        return attrs.evolve(self, h=h, alpha1=alpha1, alpha2=alpha2)

    def describe(self):
        data = super().describe()
        data.update(delta=self.delta, shape=self.shape)
        return data


@attrs.frozen
class Poly3(Protocol):
    alpha1: float = 0.0
    alpha2: float = 0.0
    alpha3: float = 0.0

    kind = 'poly3'
    parameter_names = ('alpha1', 'alpha2', 'alpha3')

    def interior(self, t):
        cubic = (self.alpha1 * t + self.alpha2) * t + self.alpha3
        return self.linear(t) + t * (t - self.tau) * cubic

    def parameters(self):
        return np.array([self.alpha1, self.alpha2, self.alpha3], dtype=float)

    def with_parameters(self, x):
        alpha1, alpha2, alpha3 = (float(v) for v in x)
        return attrs.evolve(self, alpha1=alpha1, alpha2=alpha2,
                            alpha3=alpha3)


@attrs.frozen
class PiecewiseLinear(Protocol):
    """
    Кусочно-линейный протокол с узлами nδ, n = 0..τ/δ.

    values[0] равно λ(0⁺), values[-1] равно λ(τ⁻); концы процесса λ_i, λ_f
    закреплены отдельно, скачки на границах разрешены.
    """
    values: tuple = attrs.field(default=(), converter=tuple)
    delta: float = 1e-2

    kind = 'piecewise_linear'

    def __attrs_post_init__(self):
        super().__attrs_post_init__()
        n = steps_per(self.tau, self.delta)
        if len(self.values) != n + 1:
            raise InvalidAnsatz(
                f'Ожидалось {n + 1} узлов, получено {len(self.values)}'
            )

    @classmethod
    def from_protocol(cls, p, delta):
        """Узловые значения другого протокола на сетке шага δ."""
        nodes = time_grid(p.tau, delta)
        values = np.asarray(p.interior(nodes), dtype=float)
        return cls(p.lambda_i, p.lambda_f, p.tau, tuple(values), delta)

    @property
    def nodes(self):
        return np.linspace(0.0, self.tau, len(self.values))

    def interior(self, t):
        return np.interp(t, self.nodes, np.asarray(self.values))

    @property
    def parameter_names(self):
        return tuple(f'lambda_{n}' for n in range(len(self.values)))

    def parameters(self):
        return np.array(self.values, dtype=float)

    def with_parameters(self, x):
        return attrs.evolve(self, values=tuple(float(v) for v in x))

    def describe(self):
        data = {
            'kind': self.kind,
            'lambda_i': self.lambda_i,
            'lambda_f': self.lambda_f,
            'tau': self.tau,
            'delta': self.delta,
            'values': list(self.values),
        }
        return data


def evaluate(p, t):
    """
    Значение λ(t).

    Args:
        p (Protocol): Протокол.
        t (float | numpy.ndarray): Время.

    Returns:
        float | numpy.ndarray: λ_i при t < 0, λ_f при t > τ, иначе значение
        внутренней ветви.
    """
    t = np.asarray(t, dtype=float)
    edge = EDGE_RTOL * max(1.0, p.tau)
    inside = p.interior(np.clip(t, 0.0, p.tau))
    value = np.where(t < -edge, p.lambda_i,
                     np.where(t > p.tau + edge, p.lambda_f, inside))
    if value.ndim == 0:
        return float(value)
    return value


def sample_on_grid(p, dt):
    """
    Значения λ(tₙ) на сетке tₙ = n·dt.

    Raises:
        GridMismatch: Если dt не делит τ или δ.

    Returns:
        tuple[numpy.ndarray, numpy.ndarray]: Узлы сетки и значения λ.
    """
    times = time_grid(p.tau, dt, getattr(p, 'delta', None))
    return times, evaluate(p, times)


def normalized(p, times):
    """
    Нормированный протокол λ(t)/Λ, Λ = max|λ(t)| на сетке.

    Returns:
        tuple[numpy.ndarray, float]: Нормированные значения и Λ.
    """
    values = evaluate(p, times)
    scale = float(np.max(np.abs(values)))
    if scale == 0:
        return values, 0.0
    return values / scale, scale
