"""Batch scripts package.

Scripts run from the project root, e.g. `python scripts/run_acceptance.py`.
"""
