"""
Django settings for the spectra project.

Generated by 'django-admin startproject' using Django 5.1.4.

For more information on this file, see
https://docs.djangoproject.com/en/5.1/topics/settings/

For the full list of settings and their values, see
https://docs.djangoproject.com/en/5.1/ref/settings/
"""

from pathlib import Path
from decouple import config
import sys
import os

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# Add apps and services directories to Python path
sys.path.insert(0, str(BASE_DIR / 'apps'))
sys.path.insert(0, str(BASE_DIR / 'services'))


# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = config('SECRET_KEY', default='django-insecure-spectra-cli-only-no-http-surface')

DEBUG = config('DEBUG', default=False, cast=bool)

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    # Local apps
    'core',
    'spectra',
]


# Database
# https://docs.djangoproject.com/en/5.1/ref/settings/#databases

DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': BASE_DIR / 'db.sqlite3',
    }
}


# Internationalization
# https://docs.djangoproject.com/en/5.1/topics/i18n/

LANGUAGE_CODE = 'es'

TIME_ZONE = 'UTC'

USE_I18N = True

USE_TZ = True

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'


# Numerical configuration
SPECTRA_EIG_TOL = config('SPECTRA_EIG_TOL', default=1e-9, cast=float)
SPECTRA_IMAG_TOL = config('SPECTRA_IMAG_TOL', default=1e-8, cast=float)
SPECTRA_SCAN_WORKERS = config('SPECTRA_SCAN_WORKERS', default=1, cast=int)
SPECTRA_BASIS_SIZE = config('SPECTRA_BASIS_SIZE', default=70, cast=int)
SPECTRA_SEED = config('SPECTRA_SEED', default=12345, cast=int)

# Morse defaults for `morse scan` and `morse susy`
SPECTRA_MORSE_V0 = config('SPECTRA_MORSE_V0', default=1.0, cast=float)
SPECTRA_MORSE_ALPHA = config('SPECTRA_MORSE_ALPHA', default=1.0, cast=float)

SPECTRA_LOG_LEVEL = config('SPECTRA_LOG_LEVEL', default='INFO')
SPECTRA_LOG_FILE = config('SPECTRA_LOG_FILE', default='')

# Logging Configuration
LOG_HANDLERS = ['console'] + (['file'] if SPECTRA_LOG_FILE else [])

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{levelname} {asctime} {module} {process:d} {thread:d} {message}',
            'style': '{',
        },
        'simple': {
            'format': '{levelname} {asctime} {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'level': SPECTRA_LOG_LEVEL,
            'class': 'logging.StreamHandler',
            'formatter': 'simple',
        },
    },
    'root': {
        'handlers': LOG_HANDLERS,
        'level': 'WARNING',
    },
    'loggers': {
        'django': {
            'handlers': LOG_HANDLERS,
            'level': 'INFO',
            'propagate': False,
        },
        'spectra': {
            'handlers': LOG_HANDLERS,
            'level': SPECTRA_LOG_LEVEL,
            'propagate': False,
        },
        'services': {
            'handlers': LOG_HANDLERS,
            'level': SPECTRA_LOG_LEVEL,
            'propagate': False,
        },
        'apps': {
            'handlers': LOG_HANDLERS,
            'level': SPECTRA_LOG_LEVEL,
            'propagate': False,
        },
    },
}

if SPECTRA_LOG_FILE:
    LOGGING['handlers']['file'] = {
        'level': SPECTRA_LOG_LEVEL,
        'class': 'logging.FileHandler',
        'filename': SPECTRA_LOG_FILE,
        'formatter': 'verbose',
    }
