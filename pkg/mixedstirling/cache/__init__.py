"""Shared memo tables for the counting modules"""
from .memo_registry import MemoRegistry, memo_registry

__all__ = ["MemoRegistry", "memo_registry"]
