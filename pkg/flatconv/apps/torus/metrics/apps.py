"""
Django metadata for the Metrics Django application.
"""
from django.apps import AppConfig


class MetricsConfig(AppConfig):
    """
    Configuration for the Metrics Django application.
    """

    name = "flatconv.apps.torus.metrics"
    verbose_name = "Flatconv > Torus > Metrics"
    label = "flatconv_metrics"
