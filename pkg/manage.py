#!/usr/bin/env python
"""
Django administration utility, used here to run the flatconv commands.

    python manage.py construct --n 1001 --gamma 0.6 --seed 7 --output out/
"""

import os
import sys

PWD = os.path.abspath(os.path.dirname(__file__))

if __name__ == '__main__':
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'projects.dev')
    sys.path.append(PWD)
    try:
        from django.core.management import execute_from_command_line
    except ImportError as import_error:
        raise ImportError(
            "Couldn't import Django, which runs the flatconv commands. Is it "
            "installed and available on your PYTHONPATH environment variable?"
        ) from import_error
    execute_from_command_line(sys.argv)
