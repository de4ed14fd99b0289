"""Exact-arithmetic toolkit for nilpotent commutators of nilpotent matrices.

Everything is computed over the rationals with no floating point: Jordan
types, centralizer bases, randomized nilpotent sampling, the generic
commuting-orbit map on partitions, and its inverse images.
"""

from nilcomm.commutant import dmap, dmap_index, sample_nilpotent_commuting
from nilcomm.dinverse import dinv, dmap_all
from nilcomm.exactla import ExactMatrix, build_jordan, jordan_type, rank
from nilcomm.partitions import Partition, parse, render

__all__ = [
    "ExactMatrix",
    "Partition",
    "build_jordan",
    "dinv",
    "dmap",
    "dmap_all",
    "dmap_index",
    "jordan_type",
    "parse",
    "rank",
    "render",
    "sample_nilpotent_commuting",
]
__version__ = "0.1.0"
