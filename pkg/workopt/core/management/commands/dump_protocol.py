from core.config import build_bath, build_model, build_protocol, build_run
from core.management.base import WorkoptCommand
from core.outputs import write_csv

from .optimize import protocol_rows


class Command(WorkoptCommand):
    help = 'Запись протокола из конфигурации в protocol.csv'

    def run(self, config, **options):
        model = build_model(config['system'])
        bath, beta = build_bath(config['bath'], model.epsilon)
        run = build_run(config['solver'], config['protocol'])
        protocol = build_protocol(config['protocol'], model, run, bath, beta)
        dt = run.dt_for(model, bath)
        path = write_csv(self.out_path(config, 'protocol.csv'),
                         protocol_rows(protocol, dt))
        self.success(f'{protocol.kind}: {path}')
