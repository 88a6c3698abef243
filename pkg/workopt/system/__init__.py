from .two_level import (DRIVEN, IDENTITY, SIGMA_MINUS, SIGMA_PLUS, SIGMA_X,
                        SIGMA_Y, SIGMA_Z, TUNABLE, EigenFrame, TwoLevelModel,
                        coupling, dh_dlambda, eigenframe, expectation,
                        free_energy, gibbs_state, hamiltonian, min_eigenvalue,
                        partition_function, trace_distance)

__all__ = [
    'DRIVEN',
    'TUNABLE',
    'IDENTITY',
    'SIGMA_X',
    'SIGMA_Y',
    'SIGMA_Z',
    'SIGMA_PLUS',
    'SIGMA_MINUS',
    'TwoLevelModel',
    'EigenFrame',
    'hamiltonian',
    'dh_dlambda',
    'coupling',
    'eigenframe',
    'gibbs_state',
    'partition_function',
    'free_energy',
    'expectation',
    'min_eigenvalue',
    'trace_distance',
]
