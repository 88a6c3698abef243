from .agksl import agksl_rhs, dissipator
from .hierarchy import HierarchyIndex, HierarchyState, heom_generator, heom_rhs
from .integrators import rk4_step
from .linear import UnitPropagator, linearize
from .propagators import equilibrate, propagate, steady_state
from .solvers import (AGKSL, HEOM, METHODS, TCL2, AgkslSolver, HeomSolver,
                      Solver, Tcl2Solver, make_solver)
from .tcl2 import Tcl2State, stationary_aux, tcl2_rhs
from .trajectory import Trajectory

__all__ = [
    'HEOM',
    'TCL2',
    'AGKSL',
    'METHODS',
    'HierarchyIndex',
    'HierarchyState',
    'heom_rhs',
    'heom_generator',
    'Tcl2State',
    'tcl2_rhs',
    'stationary_aux',
    'agksl_rhs',
    'dissipator',
    'rk4_step',
    'linearize',
    'UnitPropagator',
    'Solver',
    'HeomSolver',
    'Tcl2Solver',
    'AgkslSolver',
    'make_solver',
    'equilibrate',
    'steady_state',
    'propagate',
    'Trajectory',
]
