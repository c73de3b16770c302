"""
Django metadata for the Experiments Django application.
"""
from django.apps import AppConfig


class ExperimentsConfig(AppConfig):
    """
    Configuration for the Experiments Django application.

    This app only carries the command-line front end (management commands).
    """

    name = "flatconv.apps.torus.experiments"
    verbose_name = "Flatconv > Torus > Experiments"
    label = "flatconv_experiments"
