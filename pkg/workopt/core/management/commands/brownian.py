import attrs

from brownian import (QuadraticWork, analytic_optimal_ohmic,
                      analytic_optimal_overdamped, imp3_delta_optimal,
                      protocol_work, qp_optimal_protocol, to_position)
from brownian.trap import OVERDAMPED
from core.config import build_protocol, build_run, build_trap
from core.exceptions import ConfigError
from core.management.base import WorkoptCommand
from core.outputs import write_csv, write_json
from core.serializers import TrapOptimumSerializer
from protocols import sample_on_grid

MODES = ('analytic', 'qp', 'imp3', 'work')


def analytic_optimum(trap):
    bath = trap.bath
    if (bath.has_drude and bath.xi > 0) or not bath.has_ohmic:
        raise ConfigError('Аналитический оптимум существует только для '
                          'омической ванны')
    solve = (analytic_optimal_overdamped if trap.regime == OVERDAMPED
             else analytic_optimal_ohmic)
    return solve(bath.zeta, trap.epsilon, trap.tau, trap.lambda_i,
                 trap.lambda_f)


class Command(WorkoptCommand):
    """
    Броуновская частица в движущейся ловушке.

    Режимы: analytic: марковский оптимум; qp: глобальный оптимум на
    сетке; imp3: IMP3 с дельта-импульсами; work: работа протокола из
    секции [protocol].
    """
    help = 'Оптимальные протоколы движущейся ловушки'

    def add_command_arguments(self, parser):
        parser.add_argument('--mode', choices=MODES, default='analytic')

    def run(self, config, **options):
        mode = options['mode']
        trap = build_trap(config['trap'])
        step = config['trap']['step']
        summary_path = self.out_path(config, 'summary.json')
        if mode == 'analytic':
            data = TrapOptimumSerializer(analytic_optimum(trap)).data
        elif mode == 'imp3':
            data = TrapOptimumSerializer(imp3_delta_optimal(trap)).data
        elif mode == 'qp':
            optimum = qp_optimal_protocol(trap, step)
            write_csv(self.out_path(config, 'protocol.csv'), optimum.rows())
            data = {'W': optimum.work, 'scale': optimum.scale, 'step': step}
        else:
            data = self.protocol_work(config, trap, step)
        write_json(summary_path, {
            'mode': mode,
            'regime': trap.regime,
            **data,
            'config': config.describe(),
        })
        self.success(f'{mode}: W = {data["W"]:.10g}')

    def protocol_work(self, config, trap, step):
        run = build_run(config['solver'], config['protocol'])
        protocol = build_protocol(config['protocol'], trap, run)
        trap = attrs.evolve(trap, tau=protocol.tau)
        data = {'W': protocol_work(trap, protocol, step)}
        if trap.lambda_i == 0:
            _, values = sample_on_grid(protocol, step)
            form = QuadraticWork.build(trap, step)
            data['W_quadratic'] = form.evaluate(to_position(values))
        return data
