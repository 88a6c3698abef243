"""
Воспроизведение опорных расчетов на уменьшенных сетках.

- fig3: driven, (β, γ) ∈ {0.2, 1}², ξ = 1, τ ∈ {0.5, 5}; linear, IMP3, POLY3.
- fig4: tunable, (β, γ, ξ) = (5, 5, 0.2), τ = 5..10; IMP3 против POLY3.
- fig5: driven, сравнение HEOM, TCL2 и A-GKSL для оптимума IMP3.
- trap: ловушка, омическая цепочка оракулов и разрыв IMP3 против КП для
  шести ванн Друде.
"""

import itertools

import attrs
from django.conf import settings

from bath import SpectralDensity
from brownian import (TrapModel, analytic_optimal_ohmic, imp3_delta_optimal,
                      qp_optimal_protocol)
from core.config import build_optimizer, build_run
from core.management.base import WorkoptCommand
from core.outputs import write_csv, write_json
from dynamics import AGKSL, HEOM, TCL2
from optimize.protocols import IMP3, LINEAR, POLY3
from optimize.survey import SurveyGrid, survey
from system import TwoLevelModel

from .sweep import write_survey

TARGETS = ('fig3', 'fig4', 'fig5', 'trap')

DRUDE_SETS = tuple(itertools.product((0.2, 1.0, 5.0), (0.2, 1.0)))
TRAP_TAUS = (0.5, 2.0, 15.0)


def _by_cell(records):
    table = {}
    for record in records:
        cell = (record.beta, record.gamma, record.xi, record.tau)
        table.setdefault(cell, {})[record.kind] = record.work
    return table


def ansatz_hierarchy(records, tol):
    """Строки с проверкой W[IMP3*] ≤ W[POLY3*] ≤ W[linear]."""
    for cell, works in sorted(_by_cell(records).items()):
        imp3, poly3, linear = (works.get(k) for k in (IMP3, POLY3, LINEAR))
        ordered = None not in (imp3, poly3, linear) and \
            imp3 <= poly3 + tol and poly3 <= linear + tol
        yield {'beta': cell[0], 'gamma': cell[1], 'xi': cell[2],
               'tau': cell[3], 'W_imp3': imp3, 'W_poly3': poly3,
               'W_linear': linear, 'ordered': ordered}


def crossover_tau(records):
    """Наименьшее τ, при котором W[POLY3*] < W[IMP3*]."""
    for cell, works in sorted(_by_cell(records).items(),
                              key=lambda item: item[0][3]):
        if None not in (works.get(POLY3), works.get(IMP3)) and \
                works[POLY3] < works[IMP3]:
            return cell[3]
    return None


class Command(WorkoptCommand):
    help = 'Воспроизведение опорных расчетов на уменьшенных сетках'

    def add_command_arguments(self, parser):
        parser.add_argument('target', choices=TARGETS)
        parser.add_argument('--workers', type=int, default=None)
        parser.add_argument('--step', type=float, default=2e-3,
                            help='Шаг сетки δ_g для target trap')

    def run(self, config, **options):
        self.workers = options.get('workers') or settings.WORKOPT['WORKERS']
        self.run_settings = build_run(config['solver'], config['protocol'])
        self.cfg = build_optimizer(config['optimizer'], config.seed)
        summary = getattr(self, f'repro_{options["target"]}')(config,
                                                               **options)
        write_json(self.out_path(config, 'summary.json'), {
            'target': options['target'],
            **summary,
            'config': config.describe(),
        })
        self.success(f'{options["target"]}: {summary}')

    def _survey(self, config, grid, name, run=None):
        key, records = survey(grid, run or self.run_settings, self.cfg,
                              self.workers)
        write_survey(self, config, key, records, name)
        return records

    def repro_fig3(self, config, **options):
        grid = SurveyGrid(TwoLevelModel.driven(), (0.2, 1.0), (0.2, 1.0),
                          (1.0,), (0.5, 5.0), (LINEAR, IMP3, POLY3))
        records = self._survey(config, grid, 'fig3.csv')
        rows = list(ansatz_hierarchy(records, self.cfg.fatol))
        write_csv(self.out_path(config, 'fig3_hierarchy.csv'), rows)
        return {'cells': len(records),
                'ordered': all(row['ordered'] for row in rows)}

    def repro_fig4(self, config, **options):
        grid = SurveyGrid(TwoLevelModel.tunable(), (5.0,), (5.0,), (0.2,),
                          (5.0, 6.0, 7.0, 8.0, 9.0, 10.0), (IMP3, POLY3))
        records = self._survey(config, grid, 'fig4.csv')
        return {'cells': len(records), 'crossover_tau': crossover_tau(records)}

    def repro_fig5(self, config, **options):
        model = TwoLevelModel.driven()
        rows = []
        cases = (
            ((0.2,), (0.2,), (0.2,), (0.5,), (HEOM, TCL2, AGKSL)),
            ((0.2,), (5.0,), (0.002,), (0.5, 1.0, 5.0), (HEOM, TCL2)),
        )
        for betas, gammas, xis, taus, methods in cases:
            grid = SurveyGrid(model, betas, gammas, xis, taus, (IMP3,))
            for method in methods:
                run = attrs.evolve(self.run_settings, method=method)
                records = self._survey(config, grid, f'fig5_{method}.csv',
                                       run)
                rows.extend({'method': method, 'beta': r.beta,
                             'gamma': r.gamma, 'xi': r.xi, 'tau': r.tau,
                             'W': r.work} for r in records)
        write_csv(self.out_path(config, 'fig5.csv'), rows)
        return {'cells': len(rows)}

    def repro_trap(self, config, step=2e-3, **options):
        ohmic = TrapModel(SpectralDensity.ohmic(1.0), 1.0, 0.0, 1.0, 0.5)
        analytic = analytic_optimal_ohmic(1.0, 1.0, 0.5, 0.0, 1.0)
        rows = [{
            'gamma': None, 'xi': None, 'tau': 0.5,
            'W_analytic': analytic.work,
            'W_qp': qp_optimal_protocol(ohmic, step).work,
            'W_imp3': imp3_delta_optimal(ohmic).work,
        }]
        worst = 0.0
        for (gamma, xi), tau in itertools.product(DRUDE_SETS, TRAP_TAUS):
            trap = TrapModel(SpectralDensity.drude(gamma, xi), 1.0, 0.0,
                             1.0, tau)
            w_qp = qp_optimal_protocol(trap, step).work
            w_imp3 = imp3_delta_optimal(trap).work
            gap = abs(w_imp3 - w_qp) / abs(w_qp)
            worst = max(worst, gap)
            rows.append({'gamma': gamma, 'xi': xi, 'tau': tau,
                         'W_analytic': None, 'W_qp': w_qp, 'W_imp3': w_imp3,
                         'gap': gap})
        write_csv(self.out_path(config, 'trap.csv'), rows,
                  ['gamma', 'xi', 'tau', 'W_analytic', 'W_qp', 'W_imp3',
                   'gap'])
        return {'W_analytic': analytic.work, 'worst_gap': worst}
