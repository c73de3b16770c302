"""
These settings are here to use during tests, because django requires them.

In a real-world use case, apps in this project are installed into other
Django applications, so these settings will not be used.
"""

from os.path import abspath, dirname, join


def root(*args):
    """
    Get the absolute path of the given path relative to the project root.
    """
    return join(abspath(dirname(__file__)), *args)


# Nothing in flatconv touches a database; tests use SimpleTestCase.
DATABASES: dict = {}

INSTALLED_APPS = [
    # Our own apps
    "flatconv.apps.torus.grid_measures.apps.GridMeasuresConfig",
    "flatconv.apps.torus.constructions.apps.ConstructionsConfig",
    "flatconv.apps.torus.densities.apps.DensitiesConfig",
    "flatconv.apps.torus.metrics.apps.MetricsConfig",
    "flatconv.apps.torus.concentration.apps.ConcentrationConfig",
    "flatconv.apps.torus.experiments.apps.ExperimentsConfig",
]

SECRET_KEY = "insecure-secret-key"

USE_TZ = True

############################ FLATCONV SETTINGS #########################

FLATCONV = {
    # Tests must not depend on the machine's CPU count.
    "THREADS": 2,
    "DEFAULT_PHI": "log",
    "DEFAULT_CAP_EPSILON": "1/4",
    "CSV_PRECISION": 17,
}
