import numpy as np
import pytest
from django.core.management import call_command
from django.core.management.base import CommandError

from optimize.models import SurveyRecord
from thermo.models import FreeEnergyRecord

from .common import read_summary, read_table

OHMIC_TRAP = '''
    [trap]
    kind = "ohmic"
    zeta = 1.0
    tau = 0.5
    step = 0.005
'''

DECOUPLED = '''
    [system]
    kind = "driven"

    [bath]
    kind = "drude"
    xi = 0.0
    beta = 1.0

    [protocol]
    kind = "{kind}"
    tau = 0.1
    value = 0.5
'''

SWEEP = '''
    [system]
    kind = "tunable"

    [sweep]
    betas = [1.0]
    gammas = [1.0]
    xis = [0.0]
    taus = [0.1, 0.2]
    kinds = ["linear"]
'''


def run(name, path, out_dir, *args):
    call_command(name, '--config', path, '--out', str(out_dir), *args)
    return read_summary(out_dir)


class Test00Brownian:

    def test_00_analytic(self, write_config, out_dir):
        summary = run('brownian', write_config(OHMIC_TRAP), out_dir,
                      '--mode', 'analytic')
        assert summary['W'] == pytest.approx(-0.05, abs=1e-12), (
            'Команда brownian должна вернуть W* = −0.05'
        )
        assert summary['schema_version'] == 1
        assert summary['config']['trap']['zeta'] == 1.0

    def test_01_qp(self, write_config, out_dir):
        summary = run('brownian', write_config(OHMIC_TRAP), out_dir,
                      '--mode', 'qp')
        assert summary['W'] == pytest.approx(-0.05, rel=2e-2)
        rows = read_table(out_dir / 'protocol.csv')
        assert len(rows) == 101
        assert rows[0]['schema_version'] == '1'
        assert float(rows[-1]['lambda']) == pytest.approx(1.0)

    def test_02_imp3_matches_analytic(self, write_config, out_dir):
        summary = run('brownian', write_config(OHMIC_TRAP), out_dir,
                      '--mode', 'imp3')
        assert summary['slope'] == pytest.approx(0.4, abs=1e-8)
        assert summary['area'] == pytest.approx(0.4, abs=1e-8)

    def test_03_analytic_requires_ohmic(self, write_config, out_dir):
        path = write_config('''
            [trap]
            kind = "drude"
            gamma = 1.0
            xi = 1.0
        ''')
        with pytest.raises(CommandError) as info:
            run('brownian', path, out_dir, '--mode', 'analytic')
        assert info.value.returncode == 2

    def test_04_protocol_work(self, write_config, out_dir):
        path = write_config(OHMIC_TRAP + '''
            [protocol]
            kind = "linear"
            tau = 0.5
        ''')
        summary = run('brownian', path, out_dir, '--mode', 'work')
        assert summary['W'] > -0.05
        assert summary['W_quadratic'] == pytest.approx(summary['W'],
                                                       rel=1e-3)


class Test01Config:

    def test_00_unknown_key(self, write_config, out_dir):
        path = write_config('''
            [trap]
            zeta = 1.0
            friction = 2.0
        ''')
        with pytest.raises(CommandError) as info:
            run('brownian', path, out_dir)
        assert info.value.returncode == 2, (
            'Неизвестный ключ конфигурации должен давать код 2'
        )
        assert 'friction' in str(info.value)

    def test_01_syntax_error(self, write_config, out_dir):
        with pytest.raises(CommandError) as info:
            run('brownian', write_config('[trap\nzeta ='), out_dir)
        assert info.value.returncode == 2

    def test_02_missing_file(self, tmp_path, out_dir):
        with pytest.raises(CommandError) as info:
            run('brownian', str(tmp_path / 'absent.toml'), out_dir)
        assert info.value.returncode == 2


@pytest.mark.django_db
class Test02Simulate:

    def test_00_constant_protocol(self, write_config, out_dir):
        path = write_config(DECOUPLED.format(kind='constant'))
        summary = run('simulate', path, out_dir)
        assert abs(summary['W']) < 1e-12
        assert summary['dF'] == 0.0
        assert summary['second_law']
        rows = read_table(out_dir / 'trajectory.csv')
        assert len(rows) == 101
        assert float(rows[0]['rho00']) == pytest.approx(
            float(rows[-1]['rho00']), abs=1e-12), (
            'Без ванны и при постоянном λ состояние не меняется'
        )

    def test_01_free_energy_cached(self, write_config, out_dir):
        path = write_config(DECOUPLED.format(kind='linear'))
        run('simulate', path, out_dir)
        run('simulate', path, out_dir)
        assert FreeEnergyRecord.objects.count() == 1, (
            'ΔF должна вычисляться один раз и браться из кэша'
        )

    def test_02_deltaf(self, write_config, out_dir):
        path = write_config(DECOUPLED.format(kind='linear'))
        summary = run('deltaf', path, out_dir)
        assert summary['dF'] == pytest.approx(summary['dF_decoupled'],
                                              abs=1e-10)

    def test_03_optimize_linear(self, write_config, out_dir):
        path = write_config(DECOUPLED.format(kind='linear'))
        summary = run('optimize', path, out_dir, '--kind', 'linear')
        assert summary['protocol']['kind'] == 'linear'
        rows = read_table(out_dir / 'protocol.csv')
        assert float(rows[-1]['lambda_normalized']) == pytest.approx(1.0)

    def test_04_sweep_restart(self, write_config, out_dir):
        path = write_config(SWEEP)
        first = run('sweep', path, out_dir)
        assert first['cells'] == 2 and first['failed'] == 0
        rows = read_table(out_dir / 'sweep.csv')
        assert {row['status'] for row in rows} == {'done'}
        works = [float(row['W']) for row in rows]
        assert works == pytest.approx([-0.5 * np.tanh(0.5)] * 2), (
            'Без ванны населенности tunable-системы не меняются'
        )
        second = run('sweep', path, out_dir)
        assert second['survey'] == first['survey']
        assert SurveyRecord.objects.count() == 2


class Test03Tools:

    def test_00_dump_protocol(self, write_config, out_dir):
        path = write_config('''
            [bath]
            kind = "drude"
            gamma = 1.0
            xi = 0.2

            [protocol]
            kind = "imp3"
            tau = 0.5
            guess = true
        ''')
        call_command('dump_protocol', '--config', path, '--out', str(out_dir))
        rows = read_table(out_dir / 'protocol.csv')
        assert len(rows) == 501
        assert float(rows[0]['lambda_normalized']) == pytest.approx(1.0)

    def test_01_validate_bath(self, write_config, out_dir):
        path = write_config('''
            [bath]
            kind = "drude"
            gamma = 1.0
            xi = 1.0
            beta = 1.0

            [solver]
            fit_points = 100
        ''')
        summary = run('validate_bath', path, out_dir)
        assert summary['fit_error'] <= 1e-3
        assert summary['K'] == len(summary['terms'])
        assert summary['detailed_balance'] < 1e-2
        rows = read_table(out_dir / 'correlation.csv')
        assert len(rows) == 100
