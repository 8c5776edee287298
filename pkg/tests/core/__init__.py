"""Core plumbing tests.

Tests for the command registry, the Runner, logging setup and error handling.
"""
