"""
Общие шаги команд: сборка системы, решателя и вычислителя работы.
"""

import attrs
from django.conf import settings

from thermo.cache import cached_free_energy
from thermo.evaluator import WorkEvaluator

from .config import (build_bath, build_model, build_protocol, build_run,
                     build_solver)


@attrs.frozen
class Setup:
    model: object
    bath: object
    beta: float
    run: object
    solver: object
    protocol: object = None

    @property
    def dt(self):
        return self.run.dt_for(self.model, self.bath)


def align_model(model, protocol):
    """Система с концами λ_i, λ_f протокола."""
    return attrs.evolve(model, lambda_i=protocol.lambda_i,
                        lambda_f=protocol.lambda_f)


def setup(config, with_protocol=True):
    model = build_model(config['system'])
    bath, beta = build_bath(config['bath'], model.epsilon)
    run = build_run(config['solver'], config['protocol'])
    protocol = None
    if with_protocol:
        protocol = build_protocol(config['protocol'], model, run, bath, beta)
        model = align_model(model, protocol)
    solver = build_solver(model, bath, beta, run)
    return Setup(model, bath, beta, run, solver, protocol)


def free_energy_for(s, persist=True):
    return cached_free_energy(s.solver, s.run.deltaf_mode, s.dt, s.run.tau_q,
                              s.run.deltaf_nodes, persist)


def evaluator_for(s, delta_f):
    return WorkEvaluator(s.solver, delta_f, s.dt, s.run.eq_tol,
                         s.run.eq_t_max_for(s.bath))


def second_law_tol():
    return settings.WORKOPT['SECOND_LAW_TOL']
