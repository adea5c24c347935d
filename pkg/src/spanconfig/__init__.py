"""Exact cells, Betti numbers, Groebner bases and combinatorics for the spaces X_{alpha,k} of tuples of subspaces spanning C^k."""

from .combinat import Composition, OrderedSetPartition, SetSequence
from .linalg import BlockMatrix, MixedReductionResult, RatMatrix, mixed_reduce

__version__ = "0.1.0"
