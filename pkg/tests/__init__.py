"""Test suite for liepi."""
