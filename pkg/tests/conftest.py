"""Keeps the tests directory importable so the shared brute-force helpers in
``support.py`` resolve regardless of where pytest is invoked from."""
