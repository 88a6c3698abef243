import json
import os
import tempfile
from pathlib import Path

from django.test import SimpleTestCase

from bath.spectral import DRUDE, OHMIC_PLUS_DRUDE
from brownian import OVERDAMPED
from core.config import (build_bath, build_model, build_optimizer,
                         build_protocol, build_run, build_trap, read_config,
                         validate_config)
from core.exceptions import ConfigError
from core.outputs import read_csv, write_csv, write_json
from protocols import Constant, Imp3, Linear, PiecewiseLinear
from system import TUNABLE


class ConfigTest(SimpleTestCase):

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.dir = Path(self.tmp.name)

    def tearDown(self):
        self.tmp.cleanup()

    def write(self, text):
        path = self.dir / 'run.toml'
        path.write_text(text, encoding='utf-8')
        return str(path)

    def test_defaults(self):
        """Проверяем, что пустая конфигурация заполняется умолчаниями"""
        config = read_config()
        self.assertEqual(config.seed, 0)
        self.assertEqual(config['bath']['kind'], DRUDE)
        self.assertEqual(config['protocol']['kind'], 'linear')
        self.assertEqual(config.out_dir, 'results')

    def test_flags_override_file(self):
        """Проверяем, что флаги имеют приоритет над файлом"""
        path = self.write('seed = 3\n[solver]\ndt = 0.01\n')
        config = read_config(path, seed=5, dt=0.002, depth=3, out='other')
        self.assertEqual(config.seed, 5)
        self.assertEqual(config['solver']['dt'], 0.002)
        self.assertEqual(config['solver']['depth'], 3)
        self.assertEqual(config.out_dir, 'other')

    def test_unknown_key(self):
        """Проверяем, что неизвестный ключ секции отклоняется"""
        with self.assertRaisesMessage(ConfigError, 'friction'):
            validate_config({'bath': {'friction': 1.0}})

    def test_invalid_values(self):
        """Проверяем сообщения для некорректных значений"""
        with self.assertRaises(ConfigError) as info:
            validate_config({'bath': {'beta': -1.0},
                             'solver': {'method': 'euler'}})
        message = str(info.exception)
        self.assertIn('bath.beta', message)
        self.assertIn('solver.method', message)

    def test_build_run(self):
        """Проверяем, что незаданные параметры берутся из настроек"""
        run = build_run({'method': 'tcl2', 'dt': 0.01},
                        {'delta': 0.02, 'shape': 'triangle'})
        self.assertEqual(run.method, 'tcl2')
        self.assertEqual(run.dt, 0.01)
        self.assertEqual(run.delta, 0.02)
        self.assertEqual(run.shape, 'triangle')
        self.assertEqual(run.fit_tol, 1e-3)

    def test_build_optimizer(self):
        cfg = build_optimizer({'max_iter': 7}, seed=4)
        self.assertEqual(cfg.max_iter, 7)
        self.assertEqual(cfg.seed, 4)
        self.assertEqual(cfg.fatol, 1e-10)

    def test_build_protocols(self):
        """Проверяем построение протоколов из секции [protocol]"""
        config = read_config(self.write(
            '[system]\nkind = "tunable"\n[protocol]\nkind = "imp3"\n'
            'tau = 0.5\nh = 5.0\nalpha1 = 0.5\nalpha2 = 0.5\n'
        ))
        model = build_model(config['system'])
        self.assertEqual(model.kind, TUNABLE)
        run = build_run(config['solver'], config['protocol'])
        protocol = build_protocol(config['protocol'], model, run)
        self.assertIsInstance(protocol, Imp3)
        self.assertEqual((protocol.lambda_i, protocol.lambda_f), (1.0, 2.0))
        cases = (
            ({'kind': 'constant', 'tau': 1.0}, Constant),
            ({'kind': 'linear', 'tau': 1.0}, Linear),
            ({'kind': 'piecewise_linear', 'tau': 0.02,
              'values': [1.0, 1.5, 2.0]}, PiecewiseLinear),
        )
        for section, expected in cases:
            with self.subTest(kind=section['kind']):
                self.assertIsInstance(build_protocol(section, model, run),
                                      expected)

    def test_build_protocol_errors(self):
        config = read_config()
        model = build_model(config['system'])
        run = build_run(config['solver'])
        with self.assertRaises(ConfigError):
            build_protocol({'kind': 'piecewise_linear', 'tau': 1.0}, model,
                           run)
        with self.assertRaises(ConfigError):
            build_protocol({'kind': 'imp3', 'tau': 1.0, 'guess': True},
                           model, run)

    def test_build_bath_and_trap(self):
        bath, beta = build_bath({'kind': OHMIC_PLUS_DRUDE, 'zeta': 1.0,
                                 'gamma': 5.0, 'xi': 1.0, 'beta': 2.0})
        self.assertEqual(bath.kind, OHMIC_PLUS_DRUDE)
        self.assertEqual(beta, 2.0)
        trap = build_trap(read_config(self.write(
            '[trap]\nregime = "overdamped"\nzeta = 2.0\n'))['trap'])
        self.assertEqual(trap.regime, OVERDAMPED)
        self.assertEqual(trap.tau, 0.5)


class OutputsTest(SimpleTestCase):

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.dir = Path(self.tmp.name)

    def tearDown(self):
        self.tmp.cleanup()

    def test_json_schema_version(self):
        """Проверяем, что документ содержит schema_version"""
        path = write_json(self.dir / 'nested' / 'summary.json',
                          {'W': 1.5, 'values': [1, 2]})
        with open(path, encoding='utf-8') as f:
            data = json.load(f)
        self.assertEqual(data['schema_version'], 1)
        self.assertEqual(data['W'], 1.5)

    def test_csv_schema_version(self):
        """Проверяем, что первая колонка CSV содержит schema_version"""
        path = write_csv(self.dir / 'rows.csv',
                         [{'t': 0.0, 'W': 1.0}, {'t': 0.1, 'W': 2.0}])
        rows = read_csv(path)
        self.assertEqual(list(rows[0]), ['schema_version', 't', 'W'])
        self.assertEqual([row['schema_version'] for row in rows], ['1', '1'])

    def test_failed_write_leaves_nothing(self):
        """Проверяем, что при ошибке записи не остается временных файлов"""
        with self.assertRaises(TypeError):
            write_json(self.dir / 'bad.json', {'value': object()})
        self.assertEqual(os.listdir(self.dir), [])
