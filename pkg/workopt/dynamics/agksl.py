"""
Адиабатическое марковское уравнение (A-GKSL) для двухуровневой системы
в мгновенном собственном базисе H_S = Ω_t σ_z^θ/2.
"""

import numpy as np

from bath import bose_factor
from system import eigenframe


def dissipator(o, rho):
    """𝒟[o]ρ = oρo† − ½{o†o, ρ}."""
    od = o.conj().T
    product = od @ o
    return o @ rho @ od - 0.5 * (product @ rho + rho @ product)


def agksl_rhs(rho, m, lam, exp, J, beta):
    """
    Производная ρ_S по уравнению A-GKSL.

    ρ̇ = −i[(Ω + 2cos²θ·Im d(Ω))σ_z^θ/2, ρ]
        + 2cos²θ·J(Ω){(1 + n_β(Ω))𝒟[σ₋^θ] + n_β(Ω)𝒟[σ₊^θ]}ρ
        + 2sin²θ·d(0)𝒟[σ_z^θ]ρ.

    Args:
        rho (numpy.ndarray): Матрица плотности 2×2.
        m (TwoLevelModel): Система.
        lam (float): Текущее значение λ.
        exp (ExponentialExpansion): Разложение для d(ω).
        J (SpectralDensity): Спектральная плотность.
        beta (float): Обратная температура.

    Raises:
        DegenerateGap: Для tunable при λ = 0.

    Returns:
        numpy.ndarray: ρ̇_S.
    """
    frame = eigenframe(m, lam)
    omega = frame.omega
    cos2 = np.cos(frame.theta) ** 2
    sin2 = 1.0 - cos2
    d_omega = exp.halfline(omega)
    sz = frame.sigma_z
    h_eff = 0.5 * (omega + 2 * cos2 * d_omega.imag) * sz
    out = -1j * (h_eff @ rho - rho @ h_eff)
    rate = 2 * cos2 * J(omega)
    if rate:
        n = bose_factor(omega, beta)
        out = out + rate * ((1 + n) * dissipator(frame.sigma_minus, rho)
                            + n * dissipator(frame.sigma_plus, rho))
    if sin2 > 1e-15:
        out = out + 2 * sin2 * exp.halfline(0.0).real * dissipator(sz, rho)
    return out
