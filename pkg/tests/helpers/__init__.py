"""Helper function tests.

This package contains tests for the rational parsing and printing helpers.
"""
