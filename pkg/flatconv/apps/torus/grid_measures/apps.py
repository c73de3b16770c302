"""
Django metadata for the Grid Measures Django application.
"""
from django.apps import AppConfig


class GridMeasuresConfig(AppConfig):
    """
    Configuration for the Grid Measures Django application.
    """

    name = "flatconv.apps.torus.grid_measures"
    verbose_name = "Flatconv > Torus > Grid Measures"
    label = "flatconv_grid_measures"
