"""Protocols and the event bus shared across the lab."""
