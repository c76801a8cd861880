"""Partition Oracle - exhaustive enumeration of labeled-cell set partitions"""
from .partition_oracle import (
    Block, Configuration, OracleQuery, oracle_enumerate, oracle_count, oracle_count_cached,
)

__all__ = [
    "Block", "Configuration", "OracleQuery",
    "oracle_enumerate", "oracle_count", "oracle_count_cached",
]
