import attrs
import numpy as np

from system import SIGMA_X, SIGMA_Z


@attrs.define
class Trajectory:
    """
    Результат распространения по протоколу.

    Attributes:
        times (numpy.ndarray): Узлы tₙ на [0, τ].
        lambdas (numpy.ndarray): λ(tₙ) внутренней ветви протокола.
        states (numpy.ndarray): ρ_S(tₙ), форма (N + 1, 2, 2).
        derivatives (numpy.ndarray): ρ̇_S(tₙ) из генератора.
        min_eigenvalues (numpy.ndarray): Наименьшие собственные значения
            ρ_S(tₙ).
        method (str): heom, tcl2 или agksl.
        metadata (dict): Параметры решателя (D_H, dt, K).
        final (numpy.ndarray): Полное состояние решателя в момент τ.
    """
    times: np.ndarray
    lambdas: np.ndarray
    states: np.ndarray
    derivatives: np.ndarray
    min_eigenvalues: np.ndarray
    method: str
    metadata: dict = attrs.Factory(dict)
    final: np.ndarray = None

    @property
    def dt(self):
        return self.metadata.get('dt')

    def expectation(self, op):
        return np.real(np.einsum('ij,nji->n', op, self.states))

    def rows(self):
        """Строки CSV: t, λ, элементы ρ, ⟨σ_x⟩, ⟨σ_z⟩, λ_min(ρ)."""
        sx = self.expectation(SIGMA_X)
        sz = self.expectation(SIGMA_Z)
        for n, t in enumerate(self.times):
            rho = self.states[n]
            yield {
                't': t,
                'lambda': self.lambdas[n],
                'rho00': rho[0, 0].real,
                're_rho01': rho[0, 1].real,
                'im_rho01': rho[0, 1].imag,
                'rho11': rho[1, 1].real,
                'sigma_x': sx[n],
                'sigma_z': sz[n],
                'min_eigenvalue': self.min_eigenvalues[n],
            }
