"""Unit tests for rigid-jets components."""
