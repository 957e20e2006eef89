"""Test package for Stallings Lab."""
