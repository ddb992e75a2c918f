"""Django settings for the ReesAlgebraLab project.

The project has no web surface: Django provides configuration, logging and the
``manage.py`` command runner. Every tunable is read from environment variables
so that sweeps can be resized in CI without touching code. See ``.env.example``
for the full list of supported variables.
"""

import os
from pathlib import Path

from dotenv import load_dotenv

BASE_DIR = Path(__file__).resolve().parent.parent

load_dotenv(BASE_DIR / ".env")


def env_int(name: str, default: int) -> int:
    """Read an integer env var, treating an empty value as absent."""
    return int(os.getenv(name) or default)


# Nothing is signed or stored, but Django refuses to start without a key.
SECRET_KEY = os.getenv("DJANGO_SECRET_KEY") or "rees-algebra-lab-has-no-sessions"

INSTALLED_APPS = [
    "rest_framework",
    "rees",
]

# Every computation is in memory; there is no database to configure.
DATABASES = {}


# REST framework is used for its serializers and JSON renderer only.

REST_FRAMEWORK = {
    "UNAUTHENTICATED_USER": None,
    "COMPACT_JSON": False,
}


# Sweep and table bounds. The defaults run in seconds with exact integers.

REES_SWEEP_D_MAX = env_int("REES_SWEEP_D_MAX", 100)
REES_SWEEP_ELL_MAX = env_int("REES_SWEEP_ELL_MAX", 30)
REES_TABLE_D_MAX = env_int("REES_TABLE_D_MAX", 10)
REES_TABLE_ELL_MAX = env_int("REES_TABLE_ELL_MAX", 9)
# Grid cells are independent; output order is d-major whatever the pool does.
REES_TABLE_WORKERS = env_int("REES_TABLE_WORKERS", 1)
REES_CLAIM_DEGREES = env_int("REES_CLAIM_DEGREES", 10)
REES_ORACLE_TRIALS = env_int("REES_ORACLE_TRIALS", 200)
REES_ORACLE_SEED = env_int("REES_ORACLE_SEED", 20240501)
REES_DEFAULT_FORMAT = os.getenv("REES_DEFAULT_FORMAT", "json")


LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "verbose": {
            "format": "{asctime} {levelname} {name} {message}",
            "style": "{",
        },
    },
    "handlers": {
        # stderr, so that logs never interleave with JSON or CSV on stdout.
        "console": {
            "class": "logging.StreamHandler",
            "formatter": "verbose",
            "stream": "ext://sys.stderr",
        },
    },
    "root": {"handlers": ["console"], "level": os.getenv("LOG_LEVEL", "INFO")},
}
