from .analytic import (TrapOptimum, analytic_optimal_ohmic,
                       analytic_optimal_overdamped)
from .impulses import imp3_delta_optimal, imp3_delta_work
from .kernels import OverdampedKernel, green_plus, overdamped_kernel
from .quadratic import QpOptimum, QuadraticWork, qp_optimal_protocol
from .trap import OVERDAMPED, REGIMES, UNDERDAMPED, TrapModel, to_position
from .work import protocol_work, trap_trajectory, trap_work

__all__ = [
    'UNDERDAMPED',
    'OVERDAMPED',
    'REGIMES',
    'TrapModel',
    'to_position',
    'green_plus',
    'OverdampedKernel',
    'overdamped_kernel',
    'TrapOptimum',
    'analytic_optimal_ohmic',
    'analytic_optimal_overdamped',
    'QuadraticWork',
    'QpOptimum',
    'qp_optimal_protocol',
    'imp3_delta_work',
    'imp3_delta_optimal',
    'trap_trajectory',
    'trap_work',
    'protocol_work',
]
