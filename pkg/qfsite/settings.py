"""
Django settings for the qfsite project.
"""

from pathlib import Path

from decouple import Csv, config

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = config(
    "SECRET_KEY",
    default="django-insecure-qf-7d2c9a41e8b3f6051c2d4e9a8b7f3c1d0e5a6b2c9d8e7f60",
)

# SECURITY WARNING: don't run with debug turned on in production!
DEBUG = config("DEBUG", default=True, cast=bool)

ALLOWED_HOSTS = config(
    "ALLOWED_HOSTS", default="127.0.0.1,localhost,testserver", cast=Csv()
)


# Application definition

INSTALLED_APPS = [
    "django.contrib.contenttypes",
    "django.contrib.auth",
    "rest_framework",
    "quadforms",
]

MIDDLEWARE = [
    "django.middleware.security.SecurityMiddleware",
    "django.middleware.common.CommonMiddleware",
]

ROOT_URLCONF = "qfsite.urls"

TEMPLATES = [
    {
        "BACKEND": "django.template.backends.django.DjangoTemplates",
        "DIRS": [],
        "APP_DIRS": True,
        "OPTIONS": {
            "context_processors": [
                "django.template.context_processors.debug",
                "django.template.context_processors.request",
            ],
        },
    },
]

WSGI_APPLICATION = "qfsite.wsgi.application"


# Database
# https://docs.djangoproject.com/en/5.0/ref/settings/#databases

DATABASES = {
    "default": {
        "ENGINE": "django.db.backends.sqlite3",
        "NAME": BASE_DIR / "db.sqlite3",
    }
}


# Internationalization
# https://docs.djangoproject.com/en/5.0/topics/i18n/

LANGUAGE_CODE = "en-us"

TIME_ZONE = "UTC"

USE_I18N = True

USE_TZ = True

# Default primary key field type
# https://docs.djangoproject.com/en/5.0/ref/settings/#default-auto-field

DEFAULT_AUTO_FIELD = "django.db.models.BigAutoField"

# REST Framework Configuration
REST_FRAMEWORK = {
    "DEFAULT_AUTHENTICATION_CLASSES": [],
    "DEFAULT_PERMISSION_CLASSES": [],
    "UNAUTHENTICATED_USER": None,
    "DEFAULT_RENDERER_CLASSES": ["rest_framework.renderers.JSONRenderer"],
}

# Cache Configuration
# Class data and fundamental units are memoised here. The in-memory backend is
# per process; a cache directory or a Redis URL shares results between runs.
QF_CACHE_DIR = config("QF_CACHE_DIR", default=None)
REDIS_URL = config("REDIS_URL", default=None)
QF_CACHE_TTL = config(
    "QF_CACHE_TTL", default=None, cast=lambda v: int(v) if v else None
)

if QF_CACHE_DIR:
    _cache_backend = {
        "BACKEND": "django.core.cache.backends.filebased.FileBasedCache",
        "LOCATION": QF_CACHE_DIR,
    }
elif REDIS_URL:
    _cache_backend = {
        "BACKEND": "django.core.cache.backends.redis.RedisCache",
        "LOCATION": REDIS_URL,
    }
else:
    _cache_backend = {
        "BACKEND": "django.core.cache.backends.locmem.LocMemCache",
        "LOCATION": "quadforms-cache",
        "OPTIONS": {
            "MAX_ENTRIES": 200_000,
        },
    }

CACHES = {"default": {**_cache_backend, "TIMEOUT": QF_CACHE_TTL}}

# Logging
LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "plain": {"format": "%(asctime)s %(levelname)s %(name)s: %(message)s"},
    },
    "handlers": {
        "console": {"class": "logging.StreamHandler", "formatter": "plain"},
    },
    "loggers": {
        "quadforms": {
            "handlers": ["console"],
            "level": config("QF_LOG_LEVEL", default="WARNING"),
        },
    },
}

# Quadratic form computation limits
QF_CLASS_BOUND = config("QF_CLASS_BOUND", default=10_000_000, cast=int)
QF_PERIOD_CAP = config("QF_PERIOD_CAP", default=1_000_000, cast=int)
QF_WINDOW_CAP = config("QF_WINDOW_CAP", default=100_000, cast=int)
QF_PRIME_CAP = config("QF_PRIME_CAP", default=1_000_000, cast=int)
QF_WITNESS_BOUND = config("QF_WITNESS_BOUND", default=1000, cast=int)
QF_WITNESS_SCAN = config("QF_WITNESS_SCAN", default=10_000, cast=int)

# Discriminant survey settings
QF_SURVEY_CAP = config("QF_SURVEY_CAP", default=100_000, cast=int)
QF_SURVEY_WORKERS = config("QF_SURVEY_WORKERS", default=4, cast=int)
QF_SURVEY_SAMPLE_RATE = config("QF_SURVEY_SAMPLE_RATE", default=0.01, cast=float)
QF_SURVEY_SEED = config("QF_SURVEY_SEED", default=229, cast=int)
QF_SURVEY_TOLERANCE = config("QF_SURVEY_TOLERANCE", default=0.05, cast=float)
