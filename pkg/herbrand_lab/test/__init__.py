"""Unit test package for herbrand_lab."""
