"""Brute-force ground truth for a(m).

Two routes that share nothing with the engine:

* enumerate every partition of m into distinct Fibonacci numbers and take
  (#even partitions) - (#odd partitions);
* expand the truncated product prod_{F_k <= N} (1 - x^{F_k}) directly.

Partitions are tuples of Fibonacci indices in strictly decreasing order, so
``(6, 3)`` is 8 + 2.  Enumeration is exponential in the worst case; it is
practical up to m of roughly 10^5.
"""

from dataclasses import dataclass

import numpy as np

from fibseries.fibonacci import fib, locate, sum_fib_prefix


class TheoremViolation(ArithmeticError):
    """A coefficient outside {-1, 0, 1} was produced.

    Every coefficient of the product is provably -1, 0 or 1, so this means a bug.
    """


@dataclass(frozen=True)
class CoefficientBlock:
    """Coefficients a(lo), a(lo+1), ... stored as a read-only int8 array."""

    lo: int
    values: np.ndarray

    def __post_init__(self):
        vals = np.asarray(self.values)
        if vals.ndim != 1:
            raise ValueError("values must be one-dimensional")
        if vals.size and (vals.min() < -1 or vals.max() > 1):
            bad = int(np.flatnonzero((vals < -1) | (vals > 1))[0])
            raise TheoremViolation(
                f"coefficient {int(vals[bad])} at degree {self.lo + bad} is outside {{-1, 0, 1}}"
            )
        vals = vals.astype(np.int8, copy=True)
        vals.flags.writeable = False
        object.__setattr__(self, "values", vals)

    def __len__(self):
        return len(self.values)

    @property
    def hi(self):
        """Last degree covered (lo - 1 for an empty block)."""
        return self.lo + len(self.values) - 1

    def at(self, m):
        if not self.lo <= m <= self.hi:
            raise IndexError(f"degree {m} outside [{self.lo}, {self.hi}]")
        return int(self.values[m - self.lo])

    def tolist(self):
        return [int(v) for v in self.values]

    def nonzero_degrees(self):
        return [self.lo + int(i) for i in np.flatnonzero(self.values)]

    def __eq__(self, other):
        if not isinstance(other, CoefficientBlock):
            return NotImplemented
        return self.lo == other.lo and np.array_equal(self.values, other.values)

    __hash__ = None


@dataclass(frozen=True)
class PartitionTally:
    r_even: int
    r_odd: int

    @property
    def difference(self):
        return self.r_even - self.r_odd


def partition_value(p):
    return sum(fib(k) for k in p)


def partition_parity(p):
    """0 for an even number of parts, 1 for odd."""
    return len(p) % 2


def enumerate_partitions(m, prune=True):
    """Every partition of m into distinct Fibonacci numbers F_k, k >= 2.

    Partitions come back as decreasing index tuples, in depth-first order
    with larger parts tried first.  ``prune=False`` walks every subset of the
    admissible indices; it exists to cross-check the pruned search.
    """
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    if m == 0:
        return [()]
    out = []
    chosen = []

    def walk(k, residual):
        if prune and residual == 0:
            out.append(tuple(chosen))
            return
        if k < 2:
            if residual == 0:
                out.append(tuple(chosen))
            return
        if prune and (residual < 0 or residual > sum_fib_prefix(k)):
            return
        f = fib(k)
        if not prune or f <= residual:
            chosen.append(k)
            walk(k - 1, residual - f)
            chosen.pop()
        walk(k - 1, residual)

    walk(locate(m), m)
    return out


def tally(m):
    counts = [0, 0]
    for p in enumerate_partitions(m):
        counts[partition_parity(p)] += 1
    return PartitionTally(r_even=counts[0], r_odd=counts[1])


def a_bruteforce(m):
    """a(m) = r_E(m) - r_O(m), counted by exhaustive enumeration."""
    diff = tally(m).difference
    if diff not in (-1, 0, 1):
        raise TheoremViolation(f"r_E({m}) - r_O({m}) = {diff}")
    return diff


def product_series(N):
    """Coefficients a(0..N) from the product of (1 - x^{F_k}) over F_k <= N.

    Factors with F_k > N cannot touch degrees <= N, so the truncation is
    exact.  Partial products can have coefficients outside {-1, 0, 1}, so the
    working buffer is int32; the finished series is range-checked and packed.
    """
    if N < 0:
        raise ValueError(f"N must be >= 0, got {N}")
    c = np.zeros(N + 1, dtype=np.int32)
    c[0] = 1
    k = 2
    while fib(k) <= N:
        f = fib(k)
        # numpy treats overlapping operands as if the right side were copied,
        # which is exactly multiplication by (1 - x^f).
        c[f:] -= c[: N + 1 - f]
        k += 1
    return CoefficientBlock(lo=0, values=c)
