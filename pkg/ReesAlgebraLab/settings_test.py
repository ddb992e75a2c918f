"""Settings used by the test suite.

Kept separate so that a developer's local ``.env`` can never change what the
tests run against: sweep bounds and seeds below are the ones the assertions
were written for.
"""

from .settings import *  # noqa: F403

REES_SWEEP_D_MAX = 100
REES_SWEEP_ELL_MAX = 30
REES_TABLE_D_MAX = 10
REES_TABLE_ELL_MAX = 9
REES_TABLE_WORKERS = 1
REES_CLAIM_DEGREES = 10
REES_ORACLE_TRIALS = 200
REES_ORACLE_SEED = 20240501
REES_DEFAULT_FORMAT = "json"

LOGGING = {
    **LOGGING,  # noqa: F405
    "root": {"handlers": ["console"], "level": "WARNING"},
}
