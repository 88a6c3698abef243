"""
Атомарная запись результатов: временный файл в целевом каталоге и
os.replace. Каждый документ и каждая строка CSV несут schema_version.
"""

import csv
import json
import logging
import os
import tempfile
from pathlib import Path

import numpy as np
from django.conf import settings

logger = logging.getLogger(__name__)


def schema_version():
    return settings.WORKOPT['SCHEMA_VERSION']


def _to_builtin(value):
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, complex):
        return [value.real, value.imag]
    raise TypeError(f'Тип {type(value).__name__} не сериализуется в JSON')


def _atomic_write(path, write):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f'.{path.name}.')
    try:
        with os.fdopen(fd, 'w', encoding='utf-8', newline='') as f:
            write(f)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    logger.info('Записан %s', path)
    return path


def write_json(path, data):
    """
    Записывает JSON-документ; schema_version добавляется, если его нет.

    Returns:
        pathlib.Path: Путь к файлу.
    """
    document = {'schema_version': schema_version(), **data}
    return _atomic_write(
        path,
        lambda f: json.dump(document, f, ensure_ascii=False, indent=2,
                            default=_to_builtin),
    )


def write_csv(path, rows, fieldnames=None):
    """
    Записывает строки-словари в CSV; первая колонка содержит schema_version.

    Returns:
        pathlib.Path: Путь к файлу.
    """
    rows = list(rows)
    if fieldnames is None:
        fieldnames = list(rows[0]) if rows else []
    version = schema_version()

    def write(f):
        writer = csv.DictWriter(f, fieldnames=['schema_version', *fieldnames])
        writer.writeheader()
        for row in rows:
            writer.writerow({'schema_version': version, **{
                key: _to_builtin(value) if isinstance(value, np.generic)
                else value for key, value in row.items()
            }})
    return _atomic_write(path, write)


def read_csv(path):
    with open(path, encoding='utf-8', newline='') as f:
        return list(csv.DictReader(f))
