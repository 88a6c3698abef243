from .correlation import correlation_exact
from .expansion import (ExpansionTerm, ExponentialExpansion,
                        expand_correlation, halfline_transform,
                        matsubara_expansion)
from .friction import delta_weight, friction_kernel, friction_laplace
from .spectral import SpectralDensity, bose_factor, spectral_value

__all__ = [
    'SpectralDensity',
    'spectral_value',
    'bose_factor',
    'correlation_exact',
    'ExpansionTerm',
    'ExponentialExpansion',
    'expand_correlation',
    'matsubara_expansion',
    'halfline_transform',
    'friction_kernel',
    'delta_weight',
    'friction_laplace',
]
