"""
Django settings for knotlab project.

All values can be overridden through environment variables or a ``.env``
file next to the project directory.
"""

import os
from pathlib import Path
import environ

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# Initialize environment variables
env = environ.Env()
environ.Env.read_env(os.path.join(BASE_DIR.parent, '.env'))

# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = env('SECRET_KEY', default='knotlab-dev-only-secret-key')

# SECURITY WARNING: don't run with debug turned on in production!
DEBUG = env.bool('DEBUG', False)

ALLOWED_HOSTS = env.list('ALLOWED_HOSTS', default=['localhost', '127.0.0.1', 'testserver'])


# Application definition
INSTALLED_APPS = [
    'django.contrib.auth',
    'django.contrib.contenttypes',
    'django.contrib.staticfiles',

    # Third-party apps
    'rest_framework',
    'drf_yasg',
]

# local apps
localapps = [
    'knotlab.apps.linkcode.apps.LinkcodeConfig',
    'knotlab.apps.gaussdiag.apps.GaussdiagConfig',
    'knotlab.apps.matchcount.apps.MatchcountConfig',
    'knotlab.apps.surgery.apps.SurgeryConfig',
    'knotlab.apps.invariants.apps.InvariantsConfig',
    'knotlab.apps.polyalg.apps.PolyalgConfig',
    'knotlab.apps.homfly.apps.HomflyConfig',
    'knotlab.apps.weightcheck.apps.WeightcheckConfig',
    'knotlab.apps.cli.apps.CliConfig',
    'knotlab.apps.api.apps.ApiConfig',
]

INSTALLED_APPS += localapps

MIDDLEWARE = [
    'django.middleware.security.SecurityMiddleware',
    'django.middleware.common.CommonMiddleware',
]

ROOT_URLCONF = 'knotlab.core.urls'

TEMPLATES = [
    {
        'BACKEND': 'django.template.backends.django.DjangoTemplates',
        'DIRS': [],
        'APP_DIRS': True,
        'OPTIONS': {
            'context_processors': [
                'django.template.context_processors.debug',
                'django.template.context_processors.request',
            ],
        },
    },
]

WSGI_APPLICATION = 'knotlab.core.wsgi.application'


# Database (nothing is persisted; Django still wants a default connection)
DATABASES = {
    'default': env.db('DATABASE_URL', default=f'sqlite:///{BASE_DIR / "db.sqlite3"}'),
}


LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True

STATIC_URL = '/static/'

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

# REST Framework settings
REST_FRAMEWORK = {
    'DEFAULT_AUTHENTICATION_CLASSES': [],
    'DEFAULT_PERMISSION_CLASSES': [
        'rest_framework.permissions.AllowAny',
    ],
    'DEFAULT_RENDERER_CLASSES': [
        'rest_framework.renderers.JSONRenderer',
    ],
    'UNAUTHENTICATED_USER': None,
}

# Logging
KNOTLAB_LOG_LEVEL = env('KNOTLAB_LOG_LEVEL', default='INFO')

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
        'knotlab': {
            'handlers': ['console'],
            'level': KNOTLAB_LOG_LEVEL,
            'propagate': False,
        },
        'celery': {
            'handlers': ['console'],
            'level': 'WARNING',
        },
    },
}

# knotlab settings
KNOTLAB_CATALOG_PATH = env(
    'KNOTLAB_CATALOG_PATH',
    default=str(BASE_DIR / 'apps' / 'matchcount' / 'configurations.txt'),
)
KNOTLAB_FIXTURES_DIR = env(
    'KNOTLAB_FIXTURES_DIR',
    default=str(BASE_DIR / 'apps' / 'cli' / 'fixtures'),
)
KNOTLAB_VERIFY_SEED = env.int('KNOTLAB_VERIFY_SEED', default=1)
KNOTLAB_VERIFY_SIZE = env.int('KNOTLAB_VERIFY_SIZE', default=200)
KNOTLAB_MAX_CROSSINGS = env.int('KNOTLAB_MAX_CROSSINGS', default=8)
KNOTLAB_MAX_COMPONENTS = env.int('KNOTLAB_MAX_COMPONENTS', default=3)

# CELERY settings
CELERY_BROKER_URL = env('CELERY_BROKER_URL', default='memory://')
CELERY_RESULT_BACKEND = env('CELERY_RESULT_BACKEND', default='cache+memory://')
CELERY_TASK_ALWAYS_EAGER = env.bool('CELERY_TASK_ALWAYS_EAGER', default=True)
CELERY_TASK_EAGER_PROPAGATES = True
CELERY_ACCEPT_CONTENT = ['json']
CELERY_TASK_SERIALIZER = 'json'
CELERY_RESULT_SERIALIZER = 'json'
CELERY_TIMEZONE = 'UTC'
CELERY_TASK_TIME_LIMIT = 30 * 60  # 30 minutes
