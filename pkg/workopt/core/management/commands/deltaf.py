import attrs

from core.management.base import WorkoptCommand
from core.outputs import write_json
from core.pipeline import free_energy_for, setup
from core.serializers import FreeEnergyRecordSerializer
from system import free_energy
from thermo.cache import describe_free_energy, free_energy_key
from thermo.free_energy import MODES
from thermo.models import FreeEnergyRecord


class Command(WorkoptCommand):
    help = 'Разность свободных энергий ΔF с кэшированием'

    def add_command_arguments(self, parser):
        parser.add_argument('--mode', choices=MODES,
                            help='integration или protocol')

    def run(self, config, **options):
        s = setup(config, with_protocol=False)
        if options.get('mode'):
            s = attrs.evolve(s, run=attrs.evolve(s.run,
                                                 deltaf_mode=options['mode']))
        value = free_energy_for(s)
        key = free_energy_key(describe_free_energy(
            s.solver, s.run.deltaf_mode, s.dt, s.run.tau_q,
            s.run.deltaf_nodes))
        record = FreeEnergyRecord.objects.get(key=key)
        m = s.model
        bare = (free_energy(m, m.lambda_f, s.beta)
                - free_energy(m, m.lambda_i, s.beta))
        write_json(self.out_path(config, 'summary.json'), {
            **FreeEnergyRecordSerializer(record).data,
            'dF_decoupled': bare,
            'config': config.describe(),
        })
        self.success(f'ΔF = {value:.10g} (без связи: {bare:.10g})')
