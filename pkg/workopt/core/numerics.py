"""
Численные параметры расчета, разрешенные из настроек проекта.

Модуль не зависит от ORM и сериализаторов, поэтому объекты RunSettings
можно передавать в рабочие процессы.
"""

import attrs
from django.conf import settings

from system import TUNABLE

SLOW_BATH_GAMMA = 0.2
STRONG_COUPLING_XI = 1.0


def defaults():
    return settings.WORKOPT


@attrs.frozen
class RunSettings:
    """
    Параметры интегрирования, разложения ванны и релаксации.

    Поля со значением None выбираются по системе и ванне: dt уменьшается
    для tunable при γ ≤ 0.2, глубина иерархии растет при ξ ≥ 1,
    предельное время релаксации растет для медленной ванны.
    """
    method: str = 'heom'
    dt: float = None
    depth: int = None
    fit_tol: float = 1e-3
    k_max: int = 12
    fit_points: int = 2000
    eq_tol: float = 1e-12
    eq_t_max: float = None
    delta: float = 1e-2
    shape: str = 'sawtooth'
    deltaf_mode: str = 'integration'
    deltaf_nodes: int = 16
    tau_q: float = None
    dt_default: float = 1e-3
    dt_slow: float = 2e-4
    depth_strong: int = 6
    depth_weak: int = 4
    t_max_eq: float = 1e3
    t_max_eq_slow: float = 1e4

    @classmethod
    def from_settings(cls, **overrides):
        """Значения из settings.WORKOPT; None в overrides игнорируются."""
        conf = defaults()
        values = {
            'fit_tol': conf['FIT_TOL'],
            'k_max': conf['K_MAX'],
            'fit_points': conf['FIT_POINTS'],
            'eq_tol': conf['STATIONARITY_TOL'],
            'delta': conf['DELTA'],
            'shape': conf['IMPULSE_SHAPE'],
            'deltaf_mode': conf['DELTAF_MODE'],
            'deltaf_nodes': conf['DELTAF_NODES'],
            'dt_default': conf['DT'],
            'dt_slow': conf['DT_TUNABLE_SLOW_BATH'],
            'depth_strong': conf['DEPTH_STRONG'],
            'depth_weak': conf['DEPTH_WEAK'],
            't_max_eq': conf['T_MAX_EQ'],
            't_max_eq_slow': conf['T_MAX_EQ_SLOW'],
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)

    def dt_for(self, m, bath):
        if self.dt is not None:
            return self.dt
        if m.kind == TUNABLE and bath.gamma <= SLOW_BATH_GAMMA:
            return self.dt_slow
        return self.dt_default

    def depth_for(self, bath):
        if self.depth is not None:
            return self.depth
        if bath.xi >= STRONG_COUPLING_XI:
            return self.depth_strong
        return self.depth_weak

    def eq_t_max_for(self, bath):
        if self.eq_t_max is not None:
            return self.eq_t_max
        if bath.gamma <= SLOW_BATH_GAMMA:
            return self.t_max_eq_slow
        return self.t_max_eq

    def describe(self, m, bath):
        return {
            'method': self.method,
            'dt': self.dt_for(m, bath),
            'depth': self.depth_for(bath),
            'fit_tol': self.fit_tol,
            'delta': self.delta,
            'shape': self.shape,
        }
