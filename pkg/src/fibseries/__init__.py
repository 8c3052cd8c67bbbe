"""Coefficients of the infinite product A(x) = prod_{k>=2} (1 - x^{F_k}).

Every coefficient a(m) is -1, 0 or 1.  The package computes them with a
three-interval recursion over [F_n, F_{n+1}) and checks the result against
partition enumeration and direct series expansion.
"""

from fibseries.fibonacci import fib, locate, sum_fib_prefix
from fibseries.oracle import (
    CoefficientBlock,
    PartitionTally,
    TheoremViolation,
    a_bruteforce,
    enumerate_partitions,
    product_series,
    tally,
)
from fibseries.engine import IntervalDecomposition, a_fast, block, decompose, stream, support, trace

__all__ = [
    "CoefficientBlock",
    "IntervalDecomposition",
    "PartitionTally",
    "TheoremViolation",
    "a_bruteforce",
    "a_fast",
    "block",
    "decompose",
    "enumerate_partitions",
    "fib",
    "locate",
    "product_series",
    "stream",
    "sum_fib_prefix",
    "support",
    "tally",
    "trace",
]
