"""Fibonacci numbers indexed so that F_2 = 1, F_3 = 2, F_4 = 3, F_5 = 5.

F_1 is never exposed: the product runs over k >= 2, so the value 1 occurs
once.  All values are exact Python ints.
"""

import threading
from bisect import bisect_right

# _FIB[k] == F_k; slots 0 and 1 exist only so the recurrence can start.
_FIB = [0, 1, 1]
_grow_lock = threading.Lock()


def _check_index(n):
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"Fibonacci index must be an int, got {type(n).__name__}")
    if n < 2:
        raise ValueError(f"Fibonacci index must be >= 2, got {n}")


def _grow_to_index(n):
    if n < len(_FIB):
        return
    with _grow_lock:
        while len(_FIB) <= n:
            _FIB.append(_FIB[-1] + _FIB[-2])


def _grow_past_value(m):
    if _FIB[-1] > m:
        return
    with _grow_lock:
        while _FIB[-1] <= m:
            _FIB.append(_FIB[-1] + _FIB[-2])


def fib(n):
    """Return F_n for n >= 2."""
    _check_index(n)
    _grow_to_index(n)
    return _FIB[n]


def sum_fib_prefix(n):
    """Return F_2 + F_3 + ... + F_n, which equals F_{n+2} - 2."""
    _check_index(n)
    return fib(n + 2) - 2


def locate(m):
    """Return the unique n >= 2 with F_n <= m < F_{n+1}.

    Uses binary search on the exact cache; no floating point logarithms.
    """
    if m < 1:
        raise ValueError(f"locate needs m >= 1, got {m}")
    _grow_past_value(m)
    # Duplicate 1s at slots 1 and 2: bisect_right lands past both, so m=1 -> 2.
    return bisect_right(_FIB, m) - 1


def fib_upto(m):
    """All F_k (k >= 2) with F_k <= m, in increasing order."""
    if m < 1:
        return []
    return [fib(k) for k in range(2, locate(m) + 1)]
