"""
Django settings for core project.

The project exposes the KLR algebra library through management commands only;
there are no views, models or middleware.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/5.1/ref/settings/
"""

import os
from pathlib import Path

from dotenv import load_dotenv

load_dotenv()

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

SECRET_KEY = os.environ.get("SECRET_KEY", "klr-local-only")

DEBUG = True if os.environ.get("DEBUG") == "True" else False

ALLOWED_HOSTS: list[str] = []


# Application definition

INSTALLED_APPS = [
    # custom apps
    "klr",
]

ROOT_URLCONF = "core.urls"


# Database
# No code path touches it; Django only requires the entry to exist.

DATABASES = {
    "default": {
        "ENGINE": "django.db.backends.sqlite3",
        "NAME": BASE_DIR / os.environ.get("DB_NAME", "db.sqlite3"),
    }
}


# Internationalization

LANGUAGE_CODE = "en-us"

TIME_ZONE = "UTC"

USE_I18N = False

USE_TZ = True

DEFAULT_AUTO_FIELD = "django.db.models.BigAutoField"


# Logging

LOG_LEVEL = os.environ.get("LOG_LEVEL", "INFO")

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "plain": {"format": "%(asctime)s %(levelname)s %(name)s: %(message)s"},
    },
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
            "formatter": "plain",
            "level": LOG_LEVEL,
        },
    },
    "loggers": {
        "klr": {"handlers": ["console"], "level": LOG_LEVEL, "propagate": False},
    },
}


# Custom app settings

KLR_TRUNCATION = int(os.environ.get("KLR_TRUNCATION", 20))
KLR_SEED = int(os.environ.get("KLR_SEED", 0))
KLR_PROBE_SLACK = int(os.environ.get("KLR_PROBE_SLACK", 4))
KLR_RANDOM_WORDS = int(os.environ.get("KLR_RANDOM_WORDS", 300))
KLR_REPORT_SCHEMA = os.environ.get("KLR_REPORT_SCHEMA", "klr-report/1")
