from core.management.base import WorkoptCommand
from core.outputs import write_csv, write_json
from core.pipeline import (evaluator_for, free_energy_for, second_law_tol,
                           setup)
from core.serializers import WorkReportSerializer
from thermo.work import second_law_check


class Command(WorkoptCommand):
    """
    Распространение приведенного состояния по протоколу из конфигурации.

    Пишет trajectory.csv и summary.json с работой и ΔF.
    """
    help = 'Распространение по протоколу и вычисление работы'

    def run(self, config, **options):
        s = setup(config)
        evaluator = evaluator_for(s, free_energy_for(s))
        traj = evaluator.trajectory(s.protocol)
        report = evaluator.report(s.protocol, traj)
        passed, margin = second_law_check(report, second_law_tol())
        write_csv(self.out_path(config, 'trajectory.csv'), traj.rows())
        write_json(self.out_path(config, 'summary.json'), {
            **WorkReportSerializer(report).data,
            'second_law': passed,
            'config': config.describe(),
        })
        if not passed:
            self.stdout.write(self.style.ERROR(
                f'Нарушено второе начало: W − ΔF = {margin:.3e}'
            ))
        self.success(f'W = {report.W:.10g}, ΔF = {report.delta_f:.10g}')
