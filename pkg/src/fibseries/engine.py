"""Fast coefficients of A(x) from the three-interval recursion.

For n >= 5 the interval [F_n, F_{n+1}) splits into

    sub1 = [F_n, F_n + F_{n-3} - 2]              a(m) = (-1)^(n-1) a(F_n + F_{n-3} - 2 - m)
    sub2 = [F_n + F_{n-3} - 1, F_n + F_{n-2} - 1]  a(m) = 0
    sub3 = [F_n + F_{n-2}, F_{n+1} - 1]          a(m) = a(m - F_n - F_{n-2})

Both reductions land below F_{n-3}, so a point query takes O(log m) steps.
Dense ranges are built block by block with slice copies instead.
"""

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from fibseries.fibonacci import fib, locate
from fibseries.oracle import CoefficientBlock, TheoremViolation

# a(0..4), read off 1 - x - x^2 + x^4; the recursion needs n >= 5.
BASE = (1, -1, -1, 0, 1)
BASE_END = 5  # F_5


class Interval(NamedTuple):
    """Closed integer interval [lo, hi]; empty when hi < lo."""

    lo: int
    hi: int

    @property
    def size(self):
        return max(0, self.hi - self.lo + 1)

    @property
    def empty(self):
        return self.hi < self.lo

    def __contains__(self, m):
        return self.lo <= m <= self.hi


@dataclass(frozen=True)
class IntervalDecomposition:
    n: int
    sub1: Interval
    sub2: Interval
    sub3: Interval

    @property
    def sign(self):
        """(-1)^(n-1), the reflection sign used on sub1."""
        return -1 if self.n % 2 == 0 else 1

    def case_of(self, m):
        """1, 2 or 3 according to the subinterval holding m."""
        if m in self.sub3:
            return 3
        if m in self.sub2:
            return 2
        if m in self.sub1:
            return 1
        raise ValueError(f"{m} is not in [F_{self.n}, F_{self.n + 1})")


def decompose(n):
    if n < 5:
        raise ValueError(f"interval decomposition needs n >= 5, got {n}")
    fn, f2, f3 = fib(n), fib(n - 2), fib(n - 3)
    return IntervalDecomposition(
        n=n,
        sub1=Interval(fn, fn + f3 - 2),
        sub2=Interval(fn + f3 - 1, fn + f2 - 1),
        sub3=Interval(fn + f2, fib(n + 1) - 1),
    )


def _walk(m, steps=None):
    sign = 1
    while m >= BASE_END:
        n = locate(m)
        fn, f2, f3 = fib(n), fib(n - 2), fib(n - 3)
        if steps is not None:
            steps.append((m, n))
        # sub2 and sub3 are tested first: sub1 is empty when n == 5.
        if m >= fn + f2:
            m -= fn + f2
        elif m >= fn + f3 - 1:
            return 0
        else:
            if n % 2 == 0:
                sign = -sign
            m = fn + f3 - 2 - m
    return sign * BASE[m]


def a_fast(m):
    """Coefficient of x^m in A(x), for any non-negative int m."""
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    value = _walk(m)
    if value not in (-1, 0, 1):
        raise TheoremViolation(f"a({m}) = {value}")
    return value


def trace(m):
    """The (argument, interval index) pairs visited while evaluating a(m)."""
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    steps = []
    _walk(m, steps)
    return steps


def _block_values(n, prefix):
    f2, f3 = fib(n - 2), fib(n - 3)
    if len(prefix) < f3:
        raise ValueError(f"block {n} needs a(0..{f3 - 1}); prefix has {len(prefix)} terms")
    sign = -1 if n % 2 == 0 else 1
    out = np.empty(f2 + f3, dtype=np.int8)
    # prefix[:f3-1] is empty for f3 == 1, which keeps n == 5 safe.
    out[: f3 - 1] = prefix[: f3 - 1][::-1] * sign
    out[f3 - 1 : f2] = 0
    out[f2:] = prefix[:f3]
    return out


def block(n, prefix):
    """Coefficients on [F_n, F_{n+1}) copied out of a(0..F_{n-3}-1)."""
    if n < 5:
        raise ValueError(f"block needs n >= 5, got {n}")
    if prefix.lo != 0:
        raise ValueError("prefix must start at degree 0")
    return CoefficientBlock(lo=fib(n), values=_block_values(n, prefix.values))


def stream(N):
    """a(0..N), built by appending whole blocks to the base table."""
    if N < 0:
        raise ValueError(f"N must be >= 0, got {N}")
    out = np.zeros(N + 1, dtype=np.int8)
    head = min(N + 1, BASE_END)
    out[:head] = BASE[:head]
    n = 5
    while fib(n) <= N:
        lo = fib(n)
        hi = min(fib(n + 1), N + 1)
        out[lo:hi] = _block_values(n, out)[: hi - lo]
        n += 1
    return CoefficientBlock(lo=0, values=out)


def support(N):
    """Degrees m <= N with a(m) != 0, increasing."""
    return stream(N).nonzero_degrees()
