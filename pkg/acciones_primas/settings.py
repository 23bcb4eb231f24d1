"""
Configuración de Django para el proyecto acciones_primas.

Clasificación de acciones de grupos de orden λq sobre superficies de Riemann
de género q-1, descomposición de sus jacobianas y matrices de periodos.

Toda la configuración sensible o ajustable se lee del entorno (archivo .env).
"""

from pathlib import Path
import os
from dotenv import load_dotenv

# Cargar variables de entorno
load_dotenv()

BASE_DIR = Path(__file__).resolve().parent.parent

SECRET_KEY = os.environ.get('SECRET_KEY', default='your secret key')

DEBUG = os.environ.get('DEBUG', 'True') == 'True'

ALLOWED_HOSTS = ["*"]


# Application definition

DJANGO_APPS = [
    'django.contrib.auth',
    'django.contrib.contenttypes',
    'django.contrib.staticfiles',
]

THIRD_PARTY_APPS = [
    'rest_framework',
    'drf_yasg',
]

CUSTOM_APPS = [
    'apps.default',
    'apps.cyclotomic',
    'apps.groups',
    'apps.signatures',
    'apps.vectors',
    'apps.characters',
    'apps.jacobians',
    'apps.siegel',
    'apps.surfaces',
]

INSTALLED_APPS = DJANGO_APPS + THIRD_PARTY_APPS + CUSTOM_APPS

MIDDLEWARE = [
    'django.middleware.security.SecurityMiddleware',
    'django.middleware.common.CommonMiddleware',
    'django.middleware.clickjacking.XFrameOptionsMiddleware',
]

ROOT_URLCONF = 'acciones_primas.urls'

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

WSGI_APPLICATION = 'acciones_primas.wsgi.application'


# Database
# Ningún cálculo persiste datos; la entrada existe para que `manage.py check` pase.

DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': BASE_DIR / 'db.sqlite3',
    }
}

# Django Rest Framework Configuration
REST_FRAMEWORK = {
    'DEFAULT_AUTHENTICATION_CLASSES': [],
    'DEFAULT_PERMISSION_CLASSES': (
        'rest_framework.permissions.AllowAny',
    ),
    'UNAUTHENTICATED_USER': None,
}


# Límites de los algoritmos exhaustivos
GROUP_LIMITS = {
    'MAX_ORDER': int(os.getenv('SA_MAX_GROUP_ORDER', '200')),
    'MAX_VECTOR_LENGTH': 6,
}

# Solver de Newton en el semiespacio de Siegel
SIEGEL_SOLVER = {
    'STARTS': int(os.getenv('SA_NEWTON_STARTS', '64')),
    'SEED': int(os.getenv('SA_NEWTON_SEED', '0')),
    'MAX_ITERATIONS': 60,
    'RESIDUAL_TOL': 1e-10,
    'ENTRY_TOL': 1e-9,
    'PD_TOL': 1e-12,
    'GROUP_CLOSURE_CAP': 5000,
}

# Rango de primos aceptado por `classify`
CLASSIFY = {
    'MIN_Q': 7,
    'MAX_Q': 23,
}

# Número máximo de hilos para los cálculos en paralelo
SA_THREADS = int(os.getenv('SA_THREADS', str(os.cpu_count() or 1)))


LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = True

USE_TZ = True

STATIC_URL = 'static/'
STATIC_ROOT = os.path.join(BASE_DIR, 'staticfiles')

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

# Swagger Settings
SWAGGER_SETTINGS = {
    'SECURITY_DEFINITIONS': {},
    'USE_SESSION_AUTH': False,
    'VALIDATOR_URL': None,
    'OPERATIONS_SORTER': 'alpha',
    'TAGS_SORTER': 'alpha',
    'DOC_EXPANSION': 'none',
    'DEFAULT_MODEL_RENDERING': 'example',
    'SHOW_EXTENSIONS': False,
}

# Logging configuration
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
    'root': {
        'handlers': ['console'],
        'level': 'WARNING',
    },
    'loggers': {
        'django': {
            'handlers': ['console'],
            'level': 'INFO',
            'propagate': False,
        },
        'apps': {
            'handlers': ['console'],
            'level': os.getenv('SA_LOG_LEVEL', 'INFO'),
            'propagate': False,
        },
    },
}
