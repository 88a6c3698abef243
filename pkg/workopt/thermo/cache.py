"""
Постоянный кэш ΔF в базе данных.

Записи с одинаковым ключом взаимозаменяемы: значения совпадают, поэтому
последняя запись просто перезаписывает предыдущую.
"""

import hashlib
import json
import logging

from django.db import transaction

from .free_energy import INTEGRATION, free_energy_difference
from .models import FreeEnergyRecord

logger = logging.getLogger(__name__)

_memo = {}


def describe_free_energy(solver, mode, dt, tau_q, nodes):
    m = solver.model
    bath = solver.bath
    return {
        'system': {'kind': m.kind, 'epsilon': m.epsilon,
                   'lambda_i': m.lambda_i, 'lambda_f': m.lambda_f},
        'bath': {'kind': bath.kind, 'gamma': bath.gamma, 'xi': bath.xi,
                 'zeta': bath.zeta, 'epsilon': bath.epsilon},
        'beta': solver.beta,
        'method': solver.method,
        'K': solver.expansion.K,
        'depth': getattr(solver, 'depth', None),
        'mode': mode,
        'dt': dt if mode != INTEGRATION else None,
        'tau_q': tau_q if mode != INTEGRATION else None,
        'nodes': nodes if mode == INTEGRATION else None,
    }


def free_energy_key(description):
    canonical = json.dumps(description, sort_keys=True)
    return hashlib.sha256(canonical.encode()).hexdigest()


def cached_free_energy(solver, mode=INTEGRATION, dt=1e-3, tau_q=None,
                       nodes=16, persist=True):
    """
    ΔF с кэшированием в памяти процесса и в таблице FreeEnergyRecord.

    Args:
        solver (Solver): Решатель.
        mode (str): integration или protocol.
        dt (float): Шаг для режима protocol.
        tau_q (float | None): Длительность квазистатического протокола.
        nodes (int): Узлы квадратуры для режима integration.
        persist (bool): Читать и писать базу данных.

    Returns:
        float: ΔF.
    """
    description = describe_free_energy(solver, mode, dt, tau_q, nodes)
    key = free_energy_key(description)
    if key in _memo:
        return _memo[key]
    if persist:
        record = FreeEnergyRecord.objects.filter(key=key).first()
        if record is not None:
            logger.debug('ΔF из кэша: %s', record)
            _memo[key] = record.value
            return record.value
    value = free_energy_difference(solver, mode, dt, tau_q, nodes)
    if persist:
        with transaction.atomic():
            FreeEnergyRecord.objects.update_or_create(
                key=key,
                defaults={'description': description, 'value': value},
            )
    _memo[key] = value
    return value


def clear_memo():
    _memo.clear()
