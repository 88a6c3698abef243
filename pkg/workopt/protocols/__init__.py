from .ansatz import (IMPULSE_SHAPES, SAWTOOTH, TRIANGLE, Constant, Imp3,
                     Linear, PiecewiseLinear, Poly3, Protocol, evaluate,
                     normalized, sample_on_grid)
from .grid import steps_per, time_grid
from .guesses import HeightScale, Imp3Guess, imp3_initial_guess, reparam_height

__all__ = [
    'Protocol',
    'Constant',
    'Linear',
    'Imp3',
    'Poly3',
    'PiecewiseLinear',
    'SAWTOOTH',
    'TRIANGLE',
    'IMPULSE_SHAPES',
    'evaluate',
    'sample_on_grid',
    'normalized',
    'steps_per',
    'time_grid',
    'Imp3Guess',
    'imp3_initial_guess',
    'reparam_height',
    'HeightScale',
]
