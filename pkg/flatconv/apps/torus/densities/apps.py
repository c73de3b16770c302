"""
Django metadata for the Densities Django application.
"""
from django.apps import AppConfig


class DensitiesConfig(AppConfig):
    """
    Configuration for the Densities Django application.
    """

    name = "flatconv.apps.torus.densities"
    verbose_name = "Flatconv > Torus > Densities"
    label = "flatconv_densities"
