"""Command-line interface"""
from .main import cli_main

__all__ = ["cli_main"]
