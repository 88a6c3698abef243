"""
Django settings for workopt project.

Generated by 'django-admin startproject' using Django 4.2.11.

For more information on this file, see
https://docs.djangoproject.com/en/4.2/topics/settings/

For the full list of settings and their values, see
https://docs.djangoproject.com/en/4.2/ref/settings/
"""

import os
from pathlib import Path

from django.core.management.utils import get_random_secret_key
from dotenv import load_dotenv

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent


env_path = os.path.join(BASE_DIR.parent, '.env')
load_dotenv(dotenv_path=env_path)


# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = os.getenv('DJANGO_SECRET', get_random_secret_key())

DEBUG = False

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    'django.contrib.auth',
    'django.contrib.contenttypes',
    'rest_framework',
    'core.apps.CoreConfig',
    'thermo.apps.ThermoConfig',
    'optimize.apps.OptimizeConfig',
]


# Database
# https://docs.djangoproject.com/en/4.2/ref/settings/#databases

DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': os.getenv('WORKOPT_DB_PATH', BASE_DIR / 'db.sqlite3'),
    }
}


# Internationalization
# https://docs.djangoproject.com/en/4.2/topics/i18n/

LANGUAGE_CODE = 'ru-Ru'

TIME_ZONE = 'UTC'

USE_I18N = True

USE_TZ = True


# Default primary key field type
# https://docs.djangoproject.com/en/4.2/ref/settings/#default-auto-field

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'


LOG_LEVEL = os.getenv('WORKOPT_LOG_LEVEL', 'INFO')

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{asctime} {levelname} {name}: {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'verbose',
        },
    },
    'loggers': {
        name: {
            'handlers': ['console'],
            'level': LOG_LEVEL,
            'propagate': False,
        }
        for name in ('bath', 'dynamics', 'thermo', 'optimize', 'brownian',
                     'core', 'protocols', 'system')
    },
}


# Численные параметры по умолчанию. Значения переопределяются
# секциями файла конфигурации и флагами команд.
WORKOPT = {
    'DT': 1e-3,
    'DT_TUNABLE_SLOW_BATH': 2e-4,
    'FIT_TOL': 1e-3,
    'K_MAX': 12,
    'FIT_POINTS': 2000,
    'DEPTH_STRONG': 6,
    'DEPTH_WEAK': 4,
    'STATIONARITY_TOL': 1e-12,
    'T_MAX_EQ': 1e3,
    'T_MAX_EQ_SLOW': 1e4,
    'TAU_QUASISTATIC_DRIVEN': 2e4,
    'TAU_QUASISTATIC_TUNABLE': 2e3,
    'DELTAF_MODE': 'integration',
    'DELTAF_NODES': 16,
    'XATOL': 1e-2,
    'FATOL': 1e-10,
    'MAX_ITER': 2000,
    'BF_MAX_ITER': 20000,
    'SECOND_LAW_TOL': 1e-6,
    'IMPULSE_SHAPE': 'sawtooth',
    'DELTA': 1e-2,
    'SCHEMA_VERSION': 1,
    'WORKERS': 1,
    'SEED': 0,
}
