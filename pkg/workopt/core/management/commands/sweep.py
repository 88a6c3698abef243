from django.conf import settings

from core.config import build_grid, build_model, build_optimizer, build_run
from core.management.base import WorkoptCommand
from core.outputs import write_csv, write_json
from core.serializers import SurveyRecordSerializer
from optimize.models import FAILED
from optimize.survey import survey, sweep_rows


def cell_name(record):
    return (f'{record.kind}_b{record.beta:g}_g{record.gamma:g}'
            f'_x{record.xi:g}_t{record.tau:g}.json')


def write_survey(command, config, key, records, name='sweep.csv'):
    write_csv(command.out_path(config, name), sweep_rows(records))
    for record in records:
        write_json(command.out_path(config, 'cells') / cell_name(record),
                   SurveyRecordSerializer(record).data)
    failed = [r for r in records if r.status == FAILED]
    for record in failed:
        command.stdout.write(command.style.ERROR(str(record)))
    return failed


class Command(WorkoptCommand):
    """
    Обзор по сетке (β, γ, ξ) × τ × семейства протоколов.

    Повторный запуск с той же конфигурацией пропускает готовые ячейки.
    """
    help = 'Обзор оптимальной работы по сетке параметров'

    def add_command_arguments(self, parser):
        parser.add_argument('--workers', type=int, default=None,
                            help='Число рабочих процессов')

    def run(self, config, **options):
        workers = options.get('workers') or settings.WORKOPT['WORKERS']
        model = build_model(config['system'])
        run = build_run(config['solver'], config['protocol'])
        cfg = build_optimizer(config['optimizer'], config.seed)
        grid = build_grid(config['sweep'], model)
        key, records = survey(grid, run, cfg, workers)
        failed = write_survey(self, config, key, records)
        write_json(self.out_path(config, 'summary.json'), {
            'survey': key,
            'cells': len(records),
            'failed': len(failed),
            'config': config.describe(),
        })
        self.success(f'Обзор {key[:12]}: {len(records)} ячеек, '
                     f'ошибок {len(failed)}')
