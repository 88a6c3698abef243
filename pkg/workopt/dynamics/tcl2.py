"""
Уравнение TCL2 без марковского приближения.

    ρ̇ = −i[H, ρ] − [V, Qρ − ρQ†],  Q = Σₖ Cₖ + ηV,
    Ċₖ = dₖV − zₖCₖ − i[H, Cₖ],  Cₖ(0) = 0.

Q† = Σₖ C′ₖ + ηV, где C′ₖ подчиняются тому же уравнению с амплитудами d′ₖ.
"""

import attrs
import numpy as np

from .linear import commutator


@attrs.define
class Tcl2State:
    """
    Состояние TCL2.

    Attributes:
        rho (numpy.ndarray): ρ_S.
        aux (numpy.ndarray): Операторы Cₖ, форма (K, 2, 2).
        aux_conj (numpy.ndarray): Операторы C′ₖ, форма (K, 2, 2).
    """
    rho: np.ndarray
    aux: np.ndarray
    aux_conj: np.ndarray

    @classmethod
    def initial(cls, rho, n_terms):
        zeros = np.zeros((n_terms, 2, 2), dtype=complex)
        return cls(np.asarray(rho, dtype=complex), zeros, zeros.copy())

    def flat(self):
        return np.concatenate((self.rho.reshape(-1), self.aux.reshape(-1),
                               self.aux_conj.reshape(-1)))

    @classmethod
    def from_flat(cls, y, n_terms):
        y = np.asarray(y)
        size = 4 * n_terms
        return cls(y[:4].reshape(2, 2), y[4:4 + size].reshape(n_terms, 2, 2),
                   y[4 + size:].reshape(n_terms, 2, 2))

    def q(self, V, eta):
        return self.aux.sum(axis=0) + eta * V

    def q_dagger(self, V, eta):
        return self.aux_conj.sum(axis=0) + eta * V


def tcl2_rhs(state, H, V, exp):
    """
    Производная состояния TCL2.

    Args:
        state (Tcl2State): Текущее состояние.
        H (numpy.ndarray): Гамильтониан системы.
        V (numpy.ndarray): Оператор связи.
        exp (ExponentialExpansion): Разложение корреляционной функции.

    Returns:
        Tcl2State: Производная.
    """
    rho = state.rho
    inner = state.q(V, exp.eta) @ rho - rho @ state.q_dagger(V, exp.eta)
    drho = -1j * (H @ rho - rho @ H) - (V @ inner - inner @ V)
    z = exp.z[:, None, None]
    c, cc = state.aux, state.aux_conj
    daux = exp.d[:, None, None] * V - z * c - 1j * (H @ c - c @ H)
    daux_conj = (exp.d_conj[:, None, None] * V - z * cc
                 - 1j * (H @ cc - cc @ H))
    return Tcl2State(drho, daux, daux_conj)


def stationary_aux(H, V, d, z):
    """
    Стационарное Cₖ = dₖ(zₖ + iH×)⁻¹V при постоянном H.
    """
    superop = z * np.eye(4) + 1j * commutator(H)
    return d * np.linalg.solve(superop, V.reshape(-1)).reshape(2, 2)
