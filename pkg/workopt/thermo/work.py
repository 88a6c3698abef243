"""
Работа, избыточная работа и проверка второго начала.
"""

import attrs
import numpy as np
from scipy.integrate import simpson, trapezoid

from core.exceptions import GridError
from system import dh_dlambda, hamiltonian


def _hamiltonians(m, lambdas):
    base = hamiltonian(m, 0.0)
    lambdas = np.asarray(lambdas)[:, None, None]
    return base[None, :, :] + lambdas * dh_dlambda(m)


def _power_integrand(traj, m):
    """tr[H_S(λ(tₙ)) ρ̇_S(tₙ)] на узлах сетки."""
    h = _hamiltonians(m, traj.lambdas)
    return np.real(np.einsum('nij,nji->n', h, traj.derivatives))


def _boundary_term(traj, m):
    final = np.real(np.trace(hamiltonian(m, m.lambda_f) @ traj.states[-1]))
    initial = np.real(np.trace(hamiltonian(m, m.lambda_i) @ traj.states[0]))
    return final - initial


def work(traj, m):
    """
    Работа

        W = tr[H_S(λ_f)ρ_S(τ) − H_S(λ_i)ρ_S(0)] − ∫₀^τ dt tr[H_S ρ̇_S].

    Интеграл считается составной формулой Симпсона на сетке траектории.

    Args:
        traj (Trajectory): Траектория.
        m (TwoLevelModel): Система.

    Raises:
        GridError: Если число интервалов нечетно.

    Returns:
        float: W.
    """
    intervals = len(traj.times) - 1
    if intervals % 2:
        raise GridError(
            f'Формула Симпсона требует четного числа интервалов, '
            f'получено {intervals}'
        )
    integral = simpson(_power_integrand(traj, m), x=traj.times)
    return float(_boundary_term(traj, m) - integral)


def work_trapezoid(traj, m):
    """Та же работа с интегралом по формуле трапеций для сверки."""
    integral = trapezoid(_power_integrand(traj, m), x=traj.times)
    return float(_boundary_term(traj, m) - integral)


@attrs.frozen
class WorkReport:
    """
    Отчет о работе протокола.

    Attributes:
        W (float): Работа.
        delta_f (float): Разность свободных энергий ΔF.
        method (str): Метод распространения.
        protocol (dict): Описание протокола.
        metadata (dict): Параметры интегрирования.
    """
    W: float
    delta_f: float
    method: str
    protocol: dict = attrs.field(factory=dict, hash=False)
    metadata: dict = attrs.field(factory=dict, hash=False)

    @property
    def excess_work(self):
        return self.W - self.delta_f

    @property
    def margin(self):
        return self.excess_work


def second_law_check(report, tol=1e-6):
    """
    Проверка W ≥ ΔF − tol.

    Returns:
        tuple[bool, float]: Результат проверки и запас W − ΔF.
    """
    margin = report.W - report.delta_f
    return margin >= -tol, margin
