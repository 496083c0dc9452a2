"""Tests for keypieri."""
