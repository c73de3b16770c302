"""
Settings lookup for flatconv.

All configuration lives in a single ``FLATCONV`` dictionary in the Django
settings of the host project, e.g.::

    FLATCONV = {
        "THREADS": 4,
        "DEFAULT_PHI": "log",
        "DEFAULT_CAP_EPSILON": "1/4",
        "CSV_PRECISION": 17,
    }

Every key is optional. ``THREADS`` falls back to the ``FLATCONV_THREADS``
environment variable, and ``0`` means "one worker per CPU".
"""
from __future__ import annotations

import os
from fractions import Fraction
from typing import Any

from django.conf import settings
from django.core.exceptions import ImproperlyConfigured

THREADS_ENV_VAR = "FLATCONV_THREADS"

DEFAULTS: dict[str, Any] = {
    "THREADS": None,
    "DEFAULT_PHI": "log",
    "DEFAULT_CAP_EPSILON": "1/4",
    "CSV_PRECISION": 17,
}


def get_setting(name: str) -> Any:
    """
    Return one FLATCONV setting, or its default when the host doesn't set it.
    """
    config_dict = getattr(settings, "FLATCONV", {}) or {}
    if name in config_dict:
        return config_dict[name]
    if name not in DEFAULTS:
        raise ImproperlyConfigured(f"Unknown FLATCONV setting: {name!r}")
    return DEFAULTS[name]


def get_worker_count() -> int:
    """
    Return the number of worker threads trials may run on (always >= 1).
    """
    raw = get_setting("THREADS")
    if raw is None:
        raw = os.environ.get(THREADS_ENV_VAR, "0")
    try:
        threads = int(raw)
    except (TypeError, ValueError) as err:
        raise ImproperlyConfigured(
            f"FLATCONV['THREADS'] / {THREADS_ENV_VAR} must be an integer, got {raw!r}"
        ) from err
    if threads < 0:
        raise ImproperlyConfigured(f"Worker count can't be negative, got {threads}")
    if threads == 0:
        return os.cpu_count() or 1
    return threads


def get_default_cap_epsilon() -> Fraction:
    """
    Return the failure probability used to size the multiplicity cap.
    """
    raw = get_setting("DEFAULT_CAP_EPSILON")
    try:
        value = Fraction(str(raw))
    except (TypeError, ValueError, ZeroDivisionError) as err:
        raise ImproperlyConfigured(f"FLATCONV['DEFAULT_CAP_EPSILON'] is not a number: {raw!r}") from err
    if not 0 < value < 1:
        raise ImproperlyConfigured(f"FLATCONV['DEFAULT_CAP_EPSILON'] must lie in (0, 1), got {raw!r}")
    return value


def get_csv_precision() -> int:
    """
    Return the number of significant digits used for decimals in CSV files.
    """
    raw = get_setting("CSV_PRECISION")
    try:
        precision = int(raw)
    except (TypeError, ValueError) as err:
        raise ImproperlyConfigured(f"FLATCONV['CSV_PRECISION'] must be an integer, got {raw!r}") from err
    if not 1 <= precision <= 17:
        raise ImproperlyConfigured(f"FLATCONV['CSV_PRECISION'] must be within 1..17, got {precision}")
    return precision
