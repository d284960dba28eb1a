"""Desk-scale acceptance runs."""
