"""
Django metadata for the Concentration Django application.
"""
from django.apps import AppConfig


class ConcentrationConfig(AppConfig):
    """
    Configuration for the Concentration Django application.
    """

    name = "flatconv.apps.torus.concentration"
    verbose_name = "Flatconv > Torus > Concentration"
    label = "flatconv_concentration"
