"""Whole-scenario tests: degenerations, rigidity checks and the built-in suite."""
