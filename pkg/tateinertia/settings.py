"""
Django settings for the tateinertia project.

The project has no web surface and no database: Django provides the app
registry, the management-command runner and the logging configuration for
the computational apps below.
"""

import os
from pathlib import Path

from dotenv import load_dotenv

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

load_dotenv(BASE_DIR / ".env")

SECRET_KEY = os.environ.get("DJANGO_SECRET_KEY", "tateinertia-local-only")

DEBUG = os.environ.get("DJANGO_DEBUG", "False") == "True"

ALLOWED_HOSTS = []

# Application definition

PACKAGE_APPS = [
    "core",
    "fields",
    "series",
    "ore",
    "drinfeld",
    "filtration",
    "kummer",
    "uniformizer",
    "cli",
]

INSTALLED_APPS = [
    "core.apps.CoreConfig",
    "fields.apps.FieldsConfig",
    "series.apps.SeriesConfig",
    "ore.apps.OreConfig",
    "drinfeld.apps.DrinfeldConfig",
    "filtration.apps.FiltrationConfig",
    "kummer.apps.KummerConfig",
    "uniformizer.apps.UniformizerConfig",
    "cli.apps.CliConfig",
]

DATABASES = {}

# Internationalization

LANGUAGE_CODE = "en-us"

TIME_ZONE = "UTC"

USE_I18N = False

USE_TZ = True

# Computation defaults

DRINFELD_DEFAULT_PRECISION = int(os.environ.get("DRINFELD_DEFAULT_PRECISION", 32))
DRINFELD_INDEPENDENCE_BOUND = int(os.environ.get("DRINFELD_INDEPENDENCE_BOUND", 2))
DRINFELD_ITERATION_SLACK = int(os.environ.get("DRINFELD_ITERATION_SLACK", 2))
DRINFELD_PRECISION_MARGIN = int(os.environ.get("DRINFELD_PRECISION_MARGIN", 1))

# Logging

DRINFELD_LOG = os.environ.get("DRINFELD_LOG", "WARNING").upper()

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "verbose": {
            "format": "{levelname} {name}: {message}",
            "style": "{",
        },
    },
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
            "formatter": "verbose",
        },
    },
    "loggers": {
        app: {"handlers": ["console"], "level": DRINFELD_LOG, "propagate": False}
        for app in PACKAGE_APPS
    },
}
