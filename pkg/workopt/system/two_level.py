"""
Двухуровневые системы: управляемая (driven) и перестраиваемая (tunable).

Базис (|↑⟩, |↓⟩), σ_z = diag(1, −1).
"""

import attrs
import numpy as np

from core.exceptions import ConfigError, DegenerateGap

DRIVEN = 'driven'
TUNABLE = 'tunable'

IDENTITY = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
SIGMA_PLUS = np.array([[0, 1], [0, 0]], dtype=complex)
SIGMA_MINUS = np.array([[0, 0], [1, 0]], dtype=complex)


@attrs.frozen
class TwoLevelModel:
    """
    Двухуровневая система с управляющим параметром λ.

    - driven: H_S(λ) = εσ_z/2 + λσ_x/2;
    - tunable: H_S(λ) = ελσ_z/2.
    Оператор связи с ванной всегда V_S = σ_x.

    Attributes:
        kind (str): driven или tunable.
        epsilon (float): Расщепление уровней ε.
        lambda_i (float): Начальное значение λ.
        lambda_f (float): Конечное значение λ.
    """
    kind: str
    epsilon: float = 1.0
    lambda_i: float = 0.0
    lambda_f: float = 1.0

    def __attrs_post_init__(self):
        if self.kind not in (DRIVEN, TUNABLE):
            raise ConfigError(f'Неизвестный тип системы: {self.kind}')
        if not self.epsilon > 0:
            raise ConfigError('Требуется epsilon > 0')

    @classmethod
    def driven(cls, epsilon=1.0, lambda_i=0.0, lambda_f=1.0):
        return cls(DRIVEN, epsilon, lambda_i, lambda_f)

    @classmethod
    def tunable(cls, epsilon=1.0, lambda_i=1.0, lambda_f=2.0):
        return cls(TUNABLE, epsilon, lambda_i, lambda_f)

    @property
    def delta_lambda(self):
        return self.lambda_f - self.lambda_i


def hamiltonian(m, lam):
    """
    Гамильтониан H_S(λ), эрмитова матрица 2×2 с нулевым следом.
    """
    if m.kind == DRIVEN:
        return 0.5 * m.epsilon * SIGMA_Z + 0.5 * lam * SIGMA_X
    return 0.5 * m.epsilon * lam * SIGMA_Z


def dh_dlambda(m):
    """∂H_S/∂λ; гамильтониан линеен по λ."""
    if m.kind == DRIVEN:
        return 0.5 * SIGMA_X
    return 0.5 * m.epsilon * SIGMA_Z


def coupling(m):
    return SIGMA_X


@attrs.frozen
class EigenFrame:
    """
    Мгновенный собственный базис H_S = Ωσ_z^θ/2.

    σ_z^θ = cosθ σ_z + sinθ σ_x, σ_x^θ = cosθ σ_x − sinθ σ_z.

    Attributes:
        omega (float): Щель Ω ≥ 0.
        theta (float): Угол поворота θ ∈ [0, 2π).
        sign (int): sgn(cos θ).
    """
    omega: float
    theta: float
    sign: int

    @property
    def unitary(self):
        """U_θ = exp(iθσ_y/2); U_θ H_S U_θ† = diag(Ω/2, −Ω/2)."""
        c, s = np.cos(0.5 * self.theta), np.sin(0.5 * self.theta)
        return np.array([[c, s], [-s, c]], dtype=complex)

    def rotate(self, op):
        """Оператор op = U_θ† op_0 U_θ, заданный в собственном базисе."""
        u = self.unitary
        return u.conj().T @ op @ u

    @property
    def sigma_z(self):
        return self.rotate(SIGMA_Z)

    @property
    def sigma_x(self):
        return self.rotate(SIGMA_X)

    @property
    def sigma_minus(self):
        return self.rotate(SIGMA_MINUS)

    @property
    def sigma_plus(self):
        return self.rotate(SIGMA_PLUS)


def eigenframe(m, lam):
    """
    Собственный базис H_S(λ).

    Raises:
        DegenerateGap: Для tunable при λ = 0.

    Returns:
        EigenFrame: Для driven Ω = √(ε²+λ²), tgθ = λ/ε; для tunable
        Ω = ε|λ|, θ ∈ {0, π}.
    """
    if m.kind == DRIVEN:
        theta = np.arctan2(lam, m.epsilon) % (2 * np.pi)
        return EigenFrame(float(np.hypot(m.epsilon, lam)), float(theta), 1)
    if lam == 0:
        raise DegenerateGap('Нулевая щель: tunable при λ = 0')
    theta = 0.0 if lam > 0 else np.pi
    return EigenFrame(float(m.epsilon * abs(lam)), theta, int(np.sign(lam)))


def _gap(m, lam):
    if m.kind == DRIVEN:
        return float(np.hypot(m.epsilon, lam))
    return float(m.epsilon * abs(lam))


def gibbs_state(m, lam, beta):
    """
    Состояние Гиббса e^{−βH_S}/Z = (I − tanh(βΩ/2)·2H_S/Ω)/2.
    """
    omega = _gap(m, lam)
    if omega == 0:
        return 0.5 * IDENTITY
    h = hamiltonian(m, lam)
    return 0.5 * (IDENTITY - np.tanh(0.5 * beta * omega) * 2 * h / omega)


def partition_function(m, lam, beta):
    return 2 * np.cosh(0.5 * beta * _gap(m, lam))


def free_energy(m, lam, beta):
    """Свободная энергия изолированной системы −ln Z/β."""
    omega = _gap(m, lam)
    x = 0.5 * beta * omega
    return -(x + np.log1p(np.exp(-2 * x))) / beta


def expectation(op, rho):
    return float(np.real(np.trace(op @ rho)))


def min_eigenvalue(rho):
    """Наименьшее собственное значение эрмитовой части ρ (2×2)."""
    herm = 0.5 * (rho + rho.conj().T)
    a, d = np.real(herm[0, 0]), np.real(herm[1, 1])
    b = herm[0, 1]
    return float(0.5 * (a + d - np.sqrt((a - d) ** 2 + 4 * abs(b) ** 2)))


def trace_distance(rho, sigma):
    diff = rho - sigma
    diff = 0.5 * (diff + diff.conj().T)
    return float(0.5 * np.sum(np.abs(np.linalg.eigvalsh(diff))))
