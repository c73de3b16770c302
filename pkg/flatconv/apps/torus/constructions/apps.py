"""
Django metadata for the Constructions Django application.
"""
from django.apps import AppConfig


class ConstructionsConfig(AppConfig):
    """
    Configuration for the Constructions Django application.
    """

    name = "flatconv.apps.torus.constructions"
    verbose_name = "Flatconv > Torus > Constructions"
    label = "flatconv_constructions"
