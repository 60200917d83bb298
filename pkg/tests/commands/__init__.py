"""Tests for the rigid-jets command line."""
