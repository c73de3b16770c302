"""
Tests for Learning Core.
"""
