"""
Чтение TOML-конфигурации расчета и построение объектов предметной области.

Приоритет значений: флаг командной строки > файл > settings.WORKOPT.
"""

import logging

import attrs
import tomli
from django.conf import settings

from bath import SpectralDensity, expand_correlation
from bath.spectral import DRUDE, OHMIC, OHMIC_PLUS_DRUDE
from brownian import TrapModel
from dynamics import make_solver
from optimize.simplex import OptimizerConfig
from optimize.survey import SurveyGrid
from protocols import (Constant, Imp3, Linear, PiecewiseLinear, Poly3,
                       imp3_initial_guess)
from system import TUNABLE, TwoLevelModel

from .exceptions import ConfigError
from .numerics import RunSettings
from .serializers import RunConfigSerializer

logger = logging.getLogger(__name__)


def load_config(path):
    """
    Разбор TOML-файла.

    Raises:
        ConfigError: Если файл не читается или содержит ошибку синтаксиса.
    """
    try:
        with open(path, 'rb') as f:
            return tomli.load(f)
    except OSError as exc:
        raise ConfigError(f'Не удалось прочитать {path}: {exc}') from exc
    except tomli.TOMLDecodeError as exc:
        raise ConfigError(f'Ошибка синтаксиса в {path}: {exc}') from exc


def _format_errors(errors, prefix=''):
    if isinstance(errors, dict):
        for key, value in errors.items():
            yield from _format_errors(value, f'{prefix}{key}.')
    elif isinstance(errors, list):
        for item in errors:
            yield from _format_errors(item, prefix)
    else:
        yield f'{prefix.rstrip(".")}: {errors}'


@attrs.frozen
class RunConfig:
    """
    Проверенная конфигурация.

    Attributes:
        data (dict): Секции после проверки и применения флагов.
    """
    data: dict

    def __getitem__(self, name):
        return self.data[name]

    @property
    def seed(self):
        return self.data['seed']

    @property
    def out_dir(self):
        return self.data['output']['dir']

    def describe(self):
        return self.data


def validate_config(data):
    """
    Проверка словаря конфигурации.

    Raises:
        ConfigError: С перечнем всех ошибок.
    """
    serializer = RunConfigSerializer(data=data)
    if not serializer.is_valid():
        raise ConfigError('Ошибка конфигурации: ' + '; '.join(
            _format_errors(serializer.errors)))
    return serializer.validated_data


def read_config(path=None, seed=None, out=None, dt=None, depth=None):
    """
    Загрузка конфигурации из файла с переопределением флагами.

    Args:
        path (str | None): TOML-файл; без него используются значения по
            умолчанию.
        seed (int | None): Флаг --seed.
        out (str | None): Флаг --out.
        dt (float | None): Флаг --dt.
        depth (int | None): Флаг --depth.

    Returns:
        RunConfig: Проверенная конфигурация.
    """
    data = load_config(path) if path else {}
    data = validate_config(data)
    data = {key: dict(value) if isinstance(value, dict) else value
            for key, value in data.items()}
    if seed is not None:
        data['seed'] = seed
    if out is not None:
        data['output']['dir'] = out
    if dt is not None:
        data['solver']['dt'] = dt
    if depth is not None:
        data['solver']['depth'] = depth
    logger.debug('Конфигурация: %s', data)
    return RunConfig(data)


def build_model(section):
    if section.get('kind') == TUNABLE:
        factory = TwoLevelModel.tunable
    else:
        factory = TwoLevelModel.driven
    ends = {key: section[key] for key in ('lambda_i', 'lambda_f')
            if section.get(key) is not None}
    return factory(section.get('epsilon', 1.0), **ends)


def build_bath(section, epsilon=1.0):
    """
    Returns:
        tuple[SpectralDensity, float]: Спектральная плотность и β.
    """
    kind = section['kind']
    if kind == DRUDE:
        bath = SpectralDensity.drude(section['gamma'], section['xi'])
    elif kind == OHMIC:
        bath = SpectralDensity.ohmic(section['zeta'], epsilon)
    else:
        bath = SpectralDensity.ohmic_plus_drude(
            section['zeta'], section['gamma'], section['xi'], epsilon)
    return bath, section['beta']


def build_run(section, protocol=None):
    run = RunSettings.from_settings(
        method=section.get('method'),
        dt=section.get('dt'),
        depth=section.get('depth'),
        fit_tol=section.get('fit_tol'),
        k_max=section.get('k_max'),
        fit_points=section.get('fit_points'),
        eq_tol=section.get('eq_tol'),
        eq_t_max=section.get('eq_t_max'),
        deltaf_mode=section.get('deltaf_mode'),
        deltaf_nodes=section.get('deltaf_nodes'),
        tau_q=section.get('tau_q'),
    )
    if protocol:
        run = attrs.evolve(
            run,
            delta=protocol.get('delta') or run.delta,
            shape=protocol.get('shape') or run.shape,
        )
    return run


def build_expansion(bath, beta, run):
    return expand_correlation(bath, beta, run.fit_tol, run.k_max,
                              run.fit_points)


def build_solver(model, bath, beta, run):
    """
    Returns:
        Solver: Решатель с разложением ванны.
    """
    expansion = build_expansion(bath, beta, run)
    return make_solver(run.method, model, expansion, bath, beta,
                       run.depth_for(bath))


def build_protocol(section, model, run, bath=None, beta=None):
    """
    Протокол из секции [protocol] для системы model.

    Raises:
        ConfigError: Если для IMP3 с guess не задана ванна или для
            piecewise_linear не заданы узлы.
    """
    kind = section['kind']
    tau = section['tau']
    ends = (model.lambda_i, model.lambda_f, tau)
    if kind == 'constant':
        return Constant.of(section.get('value', model.lambda_i), tau)
    if kind == 'linear':
        return Linear(*ends)
    if kind == 'imp3':
        if section.get('guess'):
            if bath is None:
                raise ConfigError('Начальное приближение IMP3 требует ванну')
            guess = imp3_initial_guess(model, bath, beta, tau, run.delta)
            return guess.protocol(model, tau, run.delta, run.shape)
        return Imp3(*ends, section['h'], section['alpha1'],
                    section['alpha2'], run.delta, run.shape)
    if kind == 'poly3':
        return Poly3(*ends, section['alpha1'], section['alpha2'],
                     section['alpha3'])
    if not section.get('values'):
        raise ConfigError('Для piecewise_linear нужен список values')
    return PiecewiseLinear(*ends, tuple(section['values']), run.delta)


def build_optimizer(section, seed=0):
    conf = settings.WORKOPT
    return OptimizerConfig(
        xatol=section.get('xatol') or conf['XATOL'],
        fatol=section.get('fatol') or conf['FATOL'],
        max_iter=section.get('max_iter') or conf['MAX_ITER'],
        simplex_scale=section.get('simplex_scale') or 0.05,
        simplex_min_step=section.get('simplex_min_step') or 0.1,
        restarts=section.get('restarts', 0),
        seed=seed,
    )


def build_trap(section):
    epsilon = section['epsilon']
    kind = section['kind']
    if kind == OHMIC:
        bath = SpectralDensity.ohmic(section['zeta'], epsilon)
    elif kind == OHMIC_PLUS_DRUDE:
        bath = SpectralDensity.ohmic_plus_drude(
            section['zeta'], section['gamma'], section['xi'], epsilon)
    else:
        bath = SpectralDensity.drude(section['gamma'], section['xi'])
    return TrapModel(bath, epsilon, section['lambda_i'], section['lambda_f'],
                     section['tau'], section['regime'])


def build_grid(section, model):
    return SurveyGrid(model, section['betas'], section['gammas'],
                      section['xis'], section['taus'], section['kinds'])
