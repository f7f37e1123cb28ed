"""Exact skew Howe duality checks and samplers for random Young diagrams in a rectangle."""

from .errors import ContainmentError, DomainError, ResourceError, SkewHoweError, TheoremCheckFailure
from .partitions import Box, Partition, Rectangle, complement, conjugate, enumerate_partitions

__version__ = "0.1.0"
