import os
from pathlib import Path

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = os.environ.get("DJANGO_SECRET_KEY", "django-insecure-oddsymp-development-key-not-for-production")

# SECURITY WARNING: don't run with debug turned on in production!
DEBUG = os.environ.get("DEBUG", "True") == "True"

ALLOWED_HOSTS = ["*"]


# Application definition

INSTALLED_APPS = [
    "oddsymp",
]

MIDDLEWARE = [
    "django.middleware.common.CommonMiddleware",
]

ROOT_URLCONF = "bialternant_system.urls"

WSGI_APPLICATION = "bialternant_system.wsgi.application"


# Nothing is persisted; results go to stdout or the HTTP response.
DATABASES = {}


# Internationalization

LANGUAGE_CODE = "en-us"

TIME_ZONE = "UTC"

USE_I18N = False

USE_TZ = True


# Kernel defaults

ODDSYMP = {
    "DEFAULT_SEED": int(os.environ.get("ODDSYMP_SEED", "0")),
    "KEY_LEMMA_TRIALS": int(os.environ.get("ODDSYMP_KEY_LEMMA_TRIALS", "20")),
    # oracle cap D = n(n+1)/2 + ORACLE_EXTRA_DEGREE
    "ORACLE_EXTRA_DEGREE": int(os.environ.get("ODDSYMP_ORACLE_EXTRA_DEGREE", "4")),
    "CAUCHY_BINET_TRIALS": int(os.environ.get("ODDSYMP_CAUCHY_BINET_TRIALS", "50")),
    "JOBS": int(os.environ.get("ODDSYMP_JOBS", "0")) or os.cpu_count() or 1,
}


# Logging: diagnostics to stderr, results stay on stdout

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "verbose": {
            "format": "{levelname} {asctime} {name} {message}",
            "style": "{",
        },
    },
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
            "stream": "ext://sys.stderr",
            "formatter": "verbose",
        },
    },
    "loggers": {
        "oddsymp": {
            "handlers": ["console"],
            "level": os.environ.get("ODDSYMP_LOG_LEVEL", "INFO"),
            "propagate": False,
        },
    },
}
