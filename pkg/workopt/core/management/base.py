from pathlib import Path

from django.core.management.base import BaseCommand, CommandError

from core.config import read_config
from core.exceptions import WorkoptError


class WorkoptCommand(BaseCommand):
    """
    Базовая команда расчета.

    Читает конфигурацию с общими флагами и переводит исключения проекта в
    CommandError с кодом завершения исключения.
    """

    def add_arguments(self, parser):
        parser.add_argument('--config', help='TOML-файл конфигурации')
        parser.add_argument('--out', help='Каталог результатов')
        parser.add_argument('--seed', type=int,
                            help='Зерно генератора случайных чисел')
        parser.add_argument('--dt', type=float, help='Шаг интегрирования')
        parser.add_argument('--depth', type=int,
                            help='Глубина иерархии HEOM')
        self.add_command_arguments(parser)

    def add_command_arguments(self, parser):
        pass

    def handle(self, *args, **options):
        try:
            config = read_config(options['config'], options['seed'],
                                 options['out'], options['dt'],
                                 options['depth'])
            options = {key: value for key, value in options.items()
                       if key != 'config'}
            self.run(config, **options)
        except WorkoptError as exc:
            raise CommandError(str(exc), returncode=exc.exit_code) from exc

    def run(self, config, **options):
        raise NotImplementedError

    def out_path(self, config, name):
        return Path(config.out_dir) / name

    def success(self, message):
        self.stdout.write(self.style.SUCCESS(message))

    def notice(self, message):
        self.stdout.write(self.style.NOTICE(message))
