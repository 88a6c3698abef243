import os
import sys

import django

BASE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sys.path.append(BASE_DIR)

PROJECT_DIR_NAME = 'workopt'
PROJECT_DIR = os.path.join(BASE_DIR, PROJECT_DIR_NAME)
# проверяем, что в корне репозитория лежит папка с проектом
assert os.path.isdir(PROJECT_DIR), (
    f'В директории `{BASE_DIR}` не найдена папка c проектом '
    f'`{PROJECT_DIR_NAME}`. Убедитесь, что у вас верная структура проекта.'
)

# manage.py и пакеты расчетов должны лежать рядом
REQUIRED = ('manage.py', 'bath', 'system', 'protocols', 'dynamics', 'thermo',
            'optimize', 'brownian', 'core')
missing = [name for name in REQUIRED
           if not os.path.exists(os.path.join(PROJECT_DIR, name))]
assert not missing, (
    f'В директории `{PROJECT_DIR}` не найдены: {", ".join(missing)}. '
    f'Убедитесь, что у вас верная структура проекта.'
)

assert django.VERSION >= (4, 2), 'Пожалуйста, используйте версию Django >= 4.2'

pytest_plugins = [
    'tests.fixtures.fixture_config',
]
