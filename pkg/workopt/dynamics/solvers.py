"""
Решатели для приведенного состояния: общий интерфейс над HEOM, TCL2 и A-GKSL.
Состояние решателя хранится как плоский комплексный вектор; первые
четыре элемента всегда содержат ρ_S в построчной векторизации.
"""

import logging

import numpy as np
import scipy.sparse as sp

from core.exceptions import ConfigError, EquilibrationError
from system import coupling, dh_dlambda, hamiltonian

from .agksl import agksl_rhs
from .hierarchy import HierarchyIndex, HierarchyState, heom_generator
from .integrators import rk4_step
from .linear import commutator, left, linearize, right
from .tcl2 import Tcl2State, stationary_aux, tcl2_rhs

logger = logging.getLogger(__name__)

HEOM = 'heom'
TCL2 = 'tcl2'
AGKSL = 'agksl'
METHODS = (HEOM, TCL2, AGKSL)

SETTLE_SUBSTEPS = 20


class Solver:
    """
    Базовый решатель.

    Attributes:
        model (TwoLevelModel): Система.
        expansion (ExponentialExpansion): Разложение корреляционной функции.
        bath (SpectralDensity): Спектральная плотность.
        beta (float): Обратная температура.
    """
    method = None

    def __init__(self, model, expansion, bath, beta):
        self.model = model
        self.expansion = expansion
        self.bath = bath
        self.beta = beta
        self.V = coupling(model)

    @property
    def dim(self):
        raise NotImplementedError

    @property
    def metadata(self):
        return {'method': self.method, 'K': self.expansion.K}

    def initial(self, rho):
        """Факторизованное начальное состояние с приведенной матрицей rho."""
        raise NotImplementedError

    @staticmethod
    def reduced(y):
        return np.asarray(y[:4]).reshape(2, 2)

    def rhs(self, lam, y):
        raise NotImplementedError

    def generator(self, lam):
        """
        Аффинный генератор стационарной задачи при фиксированном λ.

        Для линейных правых частей это матрица и свободный член самой
        правой части на полном состоянии.

        Returns:
            tuple[scipy.sparse.csr_matrix, numpy.ndarray]: Матрица и
            свободный член.
        """
        return linearize(lambda y: self.rhs(lam, y), self.dim)

    def settle(self, y, lam, tol, t_max):
        """
        Переходный процесс перед релаксацией генератором.

        Returns:
            tuple[numpy.ndarray, float]: Вектор в пространстве генератора и
            затраченное время.
        """
        return y, 0.0

    def embed(self, x, lam):
        """Полное состояние решателя по вектору пространства генератора."""
        return x


class AffineSolver(Solver):
    """
    Решатель, правая часть которого линейна по λ: (A + λB)y.

    Гамильтониан H_S(λ) = H_S(0) + λ∂_λH_S, поэтому B находится как разность
    генераторов при λ = 1 и λ = 0.
    """

    def __init__(self, model, expansion, bath, beta):
        super().__init__(model, expansion, bath, beta)
        base = self._build(hamiltonian(model, 0.0))
        shifted = self._build(hamiltonian(model, 0.0) + dh_dlambda(model))
        self._base = base
        self._slope = (shifted - base).tocsr()
        self._slope.eliminate_zeros()

    def _build(self, H):
        raise NotImplementedError

    def rhs(self, lam, y):
        return self._base @ y + lam * (self._slope @ y)

    def generator(self, lam):
        matrix = (self._base + lam * self._slope).tocsr()
        return matrix, np.zeros(self.dim, dtype=complex)


class HeomSolver(AffineSolver):
    method = HEOM

    def __init__(self, model, expansion, bath, beta, depth):
        self.index = HierarchyIndex(expansion.K, depth)
        self.depth = depth
        super().__init__(model, expansion, bath, beta)
        logger.debug('HEOM: K=%d, D_H=%d, блоков %d', expansion.K, depth,
                     self.index.n_blocks)

    @property
    def dim(self):
        return 4 * self.index.n_blocks

    @property
    def metadata(self):
        return {**super().metadata, 'depth': self.depth,
                'blocks': self.index.n_blocks}

    def _build(self, H):
        return heom_generator(self.index, H, self.V, self.expansion)

    def initial(self, rho):
        return HierarchyState.initial(self.index, rho).flat()


class Tcl2Solver(Solver):
    """
    Решатель TCL2.

    Правая часть билинейна по (Cₖ, ρ_S), поэтому при фиксированном λ
    стационарная задача решается в два этапа: вспомогательные операторы
    выходят на Cₖ = dₖ(zₖ + iH×)⁻¹V, после чего уравнение для ρ_S линейно.
    """
    method = TCL2

    @property
    def dim(self):
        return 4 + 8 * self.expansion.K

    def initial(self, rho):
        return Tcl2State.initial(rho, self.expansion.K).flat()

    def rhs(self, lam, y):
        state = Tcl2State.from_flat(y, self.expansion.K)
        H = hamiltonian(self.model, lam)
        return tcl2_rhs(state, H, self.V, self.expansion).flat()

    def stationary(self, lam):
        """Стационарные Cₖ и C′ₖ при постоянном H_S(λ)."""
        H = hamiltonian(self.model, lam)
        exp = self.expansion
        shape = (exp.K, 2, 2)
        aux = np.array([stationary_aux(H, self.V, d, z)
                        for d, z in zip(exp.d, exp.z)],
                       dtype=complex).reshape(shape)
        aux_conj = np.array([stationary_aux(H, self.V, d, z)
                             for d, z in zip(exp.d_conj, exp.z)],
                            dtype=complex).reshape(shape)
        return aux, aux_conj

    def generator(self, lam):
        """
        Линейный генератор ρ_S при стационарных вспомогательных операторах.

        ρ̇ = −i[H, ρ] − [V, Qρ − ρQ†] с постоянными Q и Q†.
        """
        H = hamiltonian(self.model, lam)
        aux, aux_conj = self.stationary(lam)
        V = self.V
        q = aux.sum(axis=0) + self.expansion.eta * V
        q_dagger = aux_conj.sum(axis=0) + self.expansion.eta * V
        matrix = (-1j * commutator(H) - left(V @ q)
                  + left(V) @ right(q_dagger) + left(q) @ right(V)
                  - right(q_dagger @ V))
        return sp.csr_matrix(matrix), np.zeros(4, dtype=complex)

    def settle(self, y, lam, tol, t_max):
        """
        Переходный процесс Cₖ методом RK4 до выхода на стационарные значения.

        Raises:
            EquilibrationError: Если Cₖ не вышли на стационар за t_max.
        """
        aux, aux_conj = self.stationary(lam)
        target = np.concatenate((aux.reshape(-1), aux_conj.reshape(-1)))
        H = hamiltonian(self.model, lam)
        rate = (np.max(np.abs(self.expansion.z), initial=0.0)
                + 2.0 * np.linalg.norm(H, 2)
                + 4.0 * np.linalg.norm(self.V, 2) * np.max(np.abs(target),
                                                           initial=0.0))
        n_sub = max(SETTLE_SUBSTEPS, int(np.ceil(2.0 * rate)))
        h = 1.0 / n_sub

        def func(t, v):
            return self.rhs(lam, v)

        residual = float(np.max(np.abs(y[4:] - target), initial=0.0))
        elapsed = 0.0
        while residual >= tol:
            if elapsed >= t_max:
                raise EquilibrationError(
                    f'{self.method}: вспомогательные операторы не вышли на '
                    f'стационар за t={t_max:g}, отклонение {residual:.2e}',
                    residual=residual, elapsed=elapsed,
                )
            for n in range(n_sub):
                y = rk4_step(func, elapsed + n * h, y, h)
            elapsed += 1.0
            residual = float(np.max(np.abs(y[4:] - target)))
        logger.debug('%s: Cₖ на стационаре за t=%g', self.method, elapsed)
        return np.asarray(y[:4]), elapsed

    def embed(self, x, lam):
        aux, aux_conj = self.stationary(lam)
        return Tcl2State(np.asarray(x).reshape(2, 2), aux, aux_conj).flat()


class AgkslSolver(Solver):
    method = AGKSL

    @property
    def dim(self):
        return 4

    def initial(self, rho):
        return np.asarray(rho, dtype=complex).reshape(-1).copy()

    def rhs(self, lam, y):
        rho = np.asarray(y).reshape(2, 2)
        return agksl_rhs(rho, self.model, lam, self.expansion, self.bath,
                         self.beta).reshape(-1)


def make_solver(method, model, expansion, bath, beta, depth=4):
    """
    Создает решатель по названию метода.

    Raises:
        ConfigError: Для неизвестного метода или отрицательной глубины.
    """
    if method == HEOM:
        if depth < 0:
            raise ConfigError('Глубина иерархии должна быть >= 0')
        return HeomSolver(model, expansion, bath, beta, depth)
    if method == TCL2:
        return Tcl2Solver(model, expansion, bath, beta)
    if method == AGKSL:
        return AgkslSolver(model, expansion, bath, beta)
    raise ConfigError(f'Неизвестный метод: {method}')
