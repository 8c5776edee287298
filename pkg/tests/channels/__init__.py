"""Channel implementation tests.

Tests for the CLI channel: initialization, settings handling and where
report lines and errors are written.
"""
