"""Keeps the tests directory importable (oracles.py) without packaging it."""
