"""
Flat autoconvolutions of symmetric atomic measures on the torus.
"""

__version__ = "0.1.0"
