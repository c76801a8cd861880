"""Configuration module for mixedstirling"""
from .settings import settings

__all__ = ["settings"]
