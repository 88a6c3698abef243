"""
Обзор оптимальной работы по сетке параметров ванны и длительностей.

Ячейки независимы. Разложение ванны и ΔF вычисляются один раз на набор
(β, γ, ξ) в основном процессе; рабочие процессы выполняют только чистые
вычисления, а записи SurveyRecord создает основной процесс по мере
завершения ячеек. Ошибка ячейки записывается со статусом failed и не
останавливает обзор. Ячейки со статусом done при повторном запуске
пропускаются.
"""

import hashlib
import itertools
import json
import logging
from concurrent.futures import ProcessPoolExecutor, as_completed

import attrs
from django.db import connections, transaction

from bath import SpectralDensity, expand_correlation
from core.exceptions import WorkoptError
from dynamics import make_solver
from thermo.cache import cached_free_energy
from thermo.evaluator import WorkEvaluator

from .models import DONE, FAILED, SurveyRecord
from .protocols import KINDS, optimize_protocol

logger = logging.getLogger(__name__)


@attrs.frozen
class SurveyGrid:
    """
    Сетка обзора.

    Attributes:
        model (TwoLevelModel): Система.
        betas (tuple): Значения β.
        gammas (tuple): Значения γ.
        xis (tuple): Значения ξ.
        taus (tuple): Длительности протоколов.
        kinds (tuple): Семейства протоколов.
    """
    model: object
    betas: tuple = attrs.field(converter=tuple)
    gammas: tuple = attrs.field(converter=tuple)
    xis: tuple = attrs.field(converter=tuple)
    taus: tuple = attrs.field(converter=tuple)
    kinds: tuple = attrs.field(default=KINDS, converter=tuple)

    def bath_sets(self):
        return list(itertools.product(self.betas, self.gammas, self.xis))

    def cells(self):
        return [
            (beta, gamma, xi, tau, kind)
            for beta, gamma, xi in self.bath_sets()
            for tau in self.taus
            for kind in self.kinds
        ]

    def describe(self):
        m = self.model
        return {
            'system': {'kind': m.kind, 'epsilon': m.epsilon,
                       'lambda_i': m.lambda_i, 'lambda_f': m.lambda_f},
            'betas': list(self.betas),
            'gammas': list(self.gammas),
            'xis': list(self.xis),
            'taus': list(self.taus),
            'kinds': list(self.kinds),
        }


def survey_key(grid, run, cfg):
    description = {
        'grid': grid.describe(),
        'run': attrs.asdict(run),
        'optimizer': attrs.asdict(cfg),
    }
    canonical = json.dumps(description, sort_keys=True)
    return hashlib.sha256(canonical.encode()).hexdigest()


def run_cell(model, bath, expansion, beta, tau, kind, run, cfg, delta_f):
    """
    Оптимизация одной ячейки; без обращений к базе данных.

    Returns:
        dict: Сводка ProtocolOptimum.
    """
    solver = make_solver(run.method, model, expansion, bath, beta,
                         run.depth_for(bath))
    evaluator = WorkEvaluator(solver, delta_f, run.dt_for(model, bath),
                              run.eq_tol, run.eq_t_max_for(bath))
    return optimize_protocol(kind, evaluator, tau, cfg, run.delta,
                             run.shape).summary()


def _safe_cell(*args):
    """Ячейка не прерывает обзор: любая ошибка превращается в статус failed."""
    try:
        return DONE, run_cell(*args), ''
    except WorkoptError as exc:
        logger.error('Ячейка завершилась ошибкой: %s', exc)
        return FAILED, {}, str(exc)
    except Exception as exc:
        logger.exception('Непредвиденная ошибка ячейки')
        return FAILED, {}, f'{type(exc).__name__}: {exc}'


def _collect(future):
    # падение рабочего процесса
    try:
        return future.result()
    except Exception as exc:
        logger.error('Рабочий процесс завершился аварийно: %s', exc)
        return FAILED, {}, f'{type(exc).__name__}: {exc}'


def _record(key, cell, status, summary, error):
    beta, gamma, xi, tau, kind = cell
    with transaction.atomic():
        record, _ = SurveyRecord.objects.update_or_create(
            survey=key, beta=beta, gamma=gamma, xi=xi, tau=tau, kind=kind,
            defaults={
                'status': status,
                'work': summary.get('W'),
                'excess_work': summary.get('W_ex'),
                'error': error,
                'parameters': summary,
            },
        )
    return record


def _prepare(grid, run):
    """Разложения и ΔF для наборов ванны; ошибка набора помечает его ячейки."""
    prepared = {}
    for beta, gamma, xi in grid.bath_sets():
        bath = SpectralDensity.drude(gamma, xi)
        try:
            expansion = expand_correlation(bath, beta, run.fit_tol,
                                           run.k_max, run.fit_points)
            solver = make_solver(run.method, grid.model, expansion, bath,
                                 beta, run.depth_for(bath))
            delta_f = cached_free_energy(
                solver, run.deltaf_mode, run.dt_for(grid.model, bath),
                run.tau_q, run.deltaf_nodes,
            )
        except WorkoptError as exc:
            logger.error('Набор β=%g γ=%g ξ=%g: %s', beta, gamma, xi, exc)
            prepared[beta, gamma, xi] = exc
            continue
        prepared[beta, gamma, xi] = (bath, expansion, delta_f)
    return prepared


def survey(grid, run, cfg, workers=1):
    """
    Оптимизация всех ячеек сетки.

    Args:
        grid (SurveyGrid): Сетка обзора.
        run (RunSettings): Численные параметры.
        cfg (OptimizerConfig): Параметры оптимизатора.
        workers (int): Число рабочих процессов.

    Returns:
        tuple[str, list[SurveyRecord]]: Ключ обзора и записи всех ячеек.
    """
    key = survey_key(grid, run, cfg)
    done = set(
        SurveyRecord.objects.filter(survey=key, status=DONE).values_list(
            'beta', 'gamma', 'xi', 'tau', 'kind')
    )
    pending = [cell for cell in grid.cells() if cell not in done]
    logger.info('Обзор %s: %d ячеек, выполнено %d, осталось %d', key[:12],
                len(grid.cells()), len(done), len(pending))
    prepared = _prepare(grid, run)

    jobs = []
    for cell in pending:
        beta, gamma, xi, tau, kind = cell
        entry = prepared[beta, gamma, xi]
        if isinstance(entry, WorkoptError):
            _record(key, cell, FAILED, {}, str(entry))
            continue
        bath, expansion, delta_f = entry
        jobs.append((cell, (grid.model, bath, expansion, beta, tau, kind,
                            run, cfg, delta_f)))

    if workers > 1 and len(jobs) > 1:
        connections.close_all()
        with ProcessPoolExecutor(max_workers=workers) as executor:
            futures = {executor.submit(_safe_cell, *args): cell
                       for cell, args in jobs}
            for future in as_completed(futures):
                _record(key, futures[future], *_collect(future))
    else:
        for cell, args in jobs:
            _record(key, cell, *_safe_cell(*args))

    records = list(SurveyRecord.objects.filter(survey=key))
    return key, records


def sweep_rows(records):
    """Строки CSV обзора."""
    for record in records:
        yield {
            'beta': record.beta,
            'gamma': record.gamma,
            'xi': record.xi,
            'tau': record.tau,
            'protocol': record.kind,
            'W': record.work,
            'W_ex': record.excess_work,
            'status': record.status,
        }
