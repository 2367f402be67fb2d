"""Tests for wandering-lab."""
