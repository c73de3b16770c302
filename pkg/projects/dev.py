"""
Django settings for running the flatconv commands during development
"""
from __future__ import annotations

from pathlib import Path

# Build paths inside the project like this: BASE_DIR / {dir_name} /
BASE_DIR = Path(__file__).resolve().parents[1]


DEBUG = True

DATABASES: dict = {}

INSTALLED_APPS = (
    # Flatconv Torus Apps
    "flatconv.apps.torus.grid_measures.apps.GridMeasuresConfig",
    "flatconv.apps.torus.constructions.apps.ConstructionsConfig",
    "flatconv.apps.torus.densities.apps.DensitiesConfig",
    "flatconv.apps.torus.metrics.apps.MetricsConfig",
    "flatconv.apps.torus.concentration.apps.ConcentrationConfig",
    "flatconv.apps.torus.experiments.apps.ExperimentsConfig",
)

SECRET_KEY = "insecure-secret-key"

USE_TZ = True

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "simple": {"format": "%(asctime)s %(levelname)s %(name)s: %(message)s"},
    },
    "handlers": {
        "console": {"class": "logging.StreamHandler", "formatter": "simple"},
    },
    "loggers": {
        "flatconv": {"handlers": ["console"], "level": "INFO"},
    },
}

# flatconv configuration; every key is optional.
FLATCONV = {
    # Worker threads for trials. None falls back to the FLATCONV_THREADS
    # environment variable, and 0 means one per CPU.
    "THREADS": None,
    "DEFAULT_PHI": "log",
    "DEFAULT_CAP_EPSILON": "1/4",
    "CSV_PRECISION": 17,
}
