"""Tests modules."""
