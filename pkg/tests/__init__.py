"""Test suite for rvlogic.

Unit tests per package, hypothesis properties checked against the exact
semantics, and CLI integration tests. Each test owns its setup and I/O is
replaced at the channel boundary.
"""
