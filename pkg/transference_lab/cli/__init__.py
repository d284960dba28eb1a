"""Command-line interface for transference-lab."""

from .main import cli, main

__all__ = ["cli", "main"]
