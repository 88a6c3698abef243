from django.conf import settings

from core.config import build_optimizer
from core.management.base import WorkoptCommand
from core.outputs import write_csv, write_json
from core.pipeline import (evaluator_for, free_energy_for, second_law_tol,
                           setup)
from core.serializers import WorkReportSerializer
from optimize.protocols import KINDS, PIECEWISE_LINEAR, optimize_protocol
from protocols import normalized, sample_on_grid
from thermo.work import second_law_check


def protocol_rows(protocol, dt):
    times, values = sample_on_grid(protocol, dt)
    scaled, _ = normalized(protocol, times)
    for t, lam, lam_n in zip(times, values, scaled):
        yield {'t': t, 'lambda': lam, 'lambda_normalized': lam_n}


class Command(WorkoptCommand):
    help = 'Минимизация работы по параметрам анзаца'

    def add_command_arguments(self, parser):
        parser.add_argument('--kind', choices=KINDS,
                            help='Семейство протоколов')
        parser.add_argument('--restarts', type=int,
                            help='Случайные перезапуски B-F')

    def run(self, config, **options):
        section = dict(config['optimizer'])
        if options.get('restarts') is not None:
            section['restarts'] = options['restarts']
        kind = options.get('kind') or section['kind']
        s = setup(config, with_protocol=False)
        evaluator = evaluator_for(s, free_energy_for(s))
        cfg = build_optimizer(section, config.seed)
        max_iter = section.get('max_iter')
        if kind == PIECEWISE_LINEAR and max_iter is None:
            max_iter = settings.WORKOPT['BF_MAX_ITER']
        optimum = optimize_protocol(kind, evaluator, config['protocol']['tau'],
                                    cfg, s.run.delta, s.run.shape,
                                    max_iter=max_iter)
        passed, _ = second_law_check(optimum.report, second_law_tol())
        write_csv(self.out_path(config, 'protocol.csv'),
                  protocol_rows(optimum.protocol, s.dt))
        write_json(self.out_path(config, 'summary.json'), {
            **WorkReportSerializer(optimum.report).data,
            **optimum.summary(),
            'second_law': passed,
            'config': config.describe(),
        })
        self.success(f'{kind}: W* = {optimum.report.W:.10g}')
