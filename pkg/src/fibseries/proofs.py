"""The partition maps behind the interval recursion, made executable.

* pairing_involution swaps F_n for F_{n-1} + F_{n-2}, flipping parity;
* strip_map drops the parts F_n and F_{n-2};
* complement_map takes the complement inside {F_2, ..., F_n}.

verify_proposition enumerates every partition in a subinterval and checks
that the maps have exactly the claimed domains, images and parity effect.
Partitions are decreasing index tuples, as in :mod:`fibseries.oracle`.
"""

import random
from dataclasses import dataclass, field

from fibseries.engine import decompose
from fibseries.fibonacci import fib
from fibseries.oracle import enumerate_partitions, partition_parity, partition_value, tally


class MapDomainError(ValueError):
    """Partition handed to a map outside the domain the argument allows."""


def _check_partition(p):
    p = tuple(p)
    if any(k < 2 for k in p):
        raise MapDomainError(f"indices must be >= 2: {p}")
    if any(a <= b for a, b in zip(p, p[1:])):
        raise MapDomainError(f"indices must be strictly decreasing: {p}")
    return p


def largest_part_dichotomy(m, n):
    """Every partition of m has largest index n or n-1, and n-1 forces n-2 next.

    Valid for F_n + F_{n-3} - 1 <= m <= F_{n+1} - 1.
    """
    if n < 5:
        raise ValueError(f"n must be >= 5, got {n}")
    d = decompose(n)
    if not d.sub2.lo <= m <= d.sub3.hi:
        raise ValueError(f"m={m} outside [{d.sub2.lo}, {d.sub3.hi}]")
    for p in enumerate_partitions(m):
        if p[0] == n:
            continue
        if p[0] != n - 1 or len(p) < 2 or p[1] != n - 2:
            return False
    return True


def in_pairing_domain(p, n):
    p = _check_partition(p)
    if not p:
        return False
    if p[0] == n:
        return len(p) == 1 or p[1] <= n - 3
    return p[0] == n - 1 and len(p) >= 2 and p[1] == n - 2


def pairing_involution(p, n):
    """{n} + rest <-> {n-1, n-2} + rest, for rest below n-2."""
    if n < 4:
        raise ValueError(f"n must be >= 4, got {n}")
    p = _check_partition(p)
    if not in_pairing_domain(p, n):
        raise MapDomainError(f"{p} is not of the form (n, <=n-3, ...) or (n-1, n-2, ...) for n={n}")
    if p[0] == n:
        return (n - 1, n - 2) + p[1:]
    return (n,) + p[2:]


def strip_map(p, n):
    """Remove parts n and n-2 from a partition that starts (n, n-2, ...)."""
    p = _check_partition(p)
    if len(p) < 2 or p[0] != n or p[1] != n - 2:
        raise MapDomainError(f"{p} does not start with ({n}, {n - 2})")
    return p[2:]


def complement_map(p, n):
    """Indices of {2, ..., n} missing from p."""
    p = _check_partition(p)
    if p and p[0] > n:
        raise MapDomainError(f"{p} has an index above n={n}")
    used = set(p)
    return tuple(k for k in range(n, 1, -1) if k not in used)


@dataclass
class ProofReport:
    part: int
    n: int
    lo: int
    hi: int
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures

    def fail(self, m, partition, message):
        self.failures.append((m, partition, message))

    def summary(self):
        status = "PASS" if self.ok else "FAIL"
        return f"part {self.part} n={self.n} m in [{self.lo}, {self.hi}]: {status} ({self.checked} values, {len(self.failures)} failures)"


def _check_zero_block(m, n, report):
    parts = enumerate_partitions(m)
    pool = set(parts)
    if not largest_part_dichotomy(m, n):
        report.fail(m, None, "largest part is neither F_n nor F_{n-1} + F_{n-2}")
    for p in parts:
        if not in_pairing_domain(p, n):
            report.fail(m, p, "left unpaired")
            continue
        q = pairing_involution(p, n)
        if q not in pool:
            report.fail(m, p, f"partner {q} is not a partition of m")
        elif partition_parity(q) == partition_parity(p):
            report.fail(m, p, f"partner {q} has the same parity")
        elif pairing_involution(q, n) != p:
            report.fail(m, p, "pairing is not an involution here")
    t = tally(m)
    if t.r_even != t.r_odd:
        report.fail(m, None, f"r_E={t.r_even} != r_O={t.r_odd}")


def _check_shift_block(m, n, report):
    parts = enumerate_partitions(m)
    if not largest_part_dichotomy(m, n):
        report.fail(m, None, "largest part is neither F_n nor F_{n-1} + F_{n-2}")
    leftover = [p for p in parts if len(p) >= 2 and p[0] == n and p[1] == n - 2]
    paired = set(parts) - set(leftover)
    for p in paired:
        if not in_pairing_domain(p, n):
            report.fail(m, p, "neither paired nor of the form F_n + F_{n-2} + ...")
            continue
        q = pairing_involution(p, n)
        if q not in paired:
            report.fail(m, p, f"partner {q} is not among the paired partitions")
        elif partition_parity(q) == partition_parity(p):
            report.fail(m, p, f"partner {q} has the same parity")

    m_low = m - fib(n) - fib(n - 2)
    images = [strip_map(p, n) for p in leftover]
    if len(set(images)) != len(images):
        report.fail(m, None, "strip map is not injective")
    for p, q in zip(leftover, images):
        if partition_parity(p) != partition_parity(q):
            report.fail(m, p, "strip map changed parity")
    targets = enumerate_partitions(m_low)
    for q in targets:
        if q and q[0] > n - 3:
            report.fail(m, q, f"partition of {m_low} uses an index above n-3")
    if set(images) != set(targets):
        report.fail(m, None, f"strip map images differ from the partitions of {m_low}")
    if tally(m).difference != tally(m_low).difference:
        report.fail(m, None, f"a({m}) != a({m_low})")


def _check_reflect_block(m, n, report):
    d = decompose(n)
    parts = enumerate_partitions(m)
    m_comp = fib(n + 2) - 2 - m
    if not d.sub3.lo <= m_comp <= fib(n + 1) - 2:
        report.fail(m, None, f"complement target {m_comp} outside [F_n + F_(n-2), F_(n+1) - 2]")
    for p in parts:
        if p[0] > n:
            report.fail(m, p, "part larger than F_n")
    parts = [p for p in parts if p[0] <= n]
    images = [complement_map(p, n) for p in parts]
    if len(set(images)) != len(images):
        report.fail(m, None, "complement map is not injective")
    for p, q in zip(parts, images):
        if len(p) + len(q) != n - 1:
            report.fail(m, p, f"part counts {len(p)} + {len(q)} != n - 1")
        if partition_value(q) != m_comp:
            report.fail(m, p, f"image {q} does not sum to {m_comp}")
    targets = enumerate_partitions(m_comp)
    if any(q[0] > n for q in targets if q):
        report.fail(m, None, f"a partition of {m_comp} uses a part above F_n")
    if set(images) != set(targets):
        report.fail(m, None, f"complement images differ from the partitions of {m_comp}")

    sign = -1 if n % 2 == 0 else 1
    a_m = tally(m).difference
    if a_m != sign * tally(m_comp).difference:
        report.fail(m, None, f"a({m}) != (-1)^(n-1) a({m_comp})")
    mirror = d.sub1.hi - m  # F_n + F_{n-3} - 2 - m
    if a_m != sign * tally(mirror).difference:
        report.fail(m, None, f"a({m}) != (-1)^(n-1) a({mirror})")


_CHECKS = {1: ("sub1", _check_reflect_block), 2: ("sub2", _check_zero_block), 3: ("sub3", _check_shift_block)}


def verify_proposition(part, n):
    """Exhaustively check one part of the interval recursion at index n.

    Exponential in n through partition enumeration; n up to about 20 runs
    in seconds.
    """
    if part not in _CHECKS:
        raise ValueError(f"part must be 1, 2 or 3, got {part}")
    if n < 5:
        raise ValueError(f"n must be >= 5, got {n}")
    attr, check = _CHECKS[part]
    interval = getattr(decompose(n), attr)
    report = ProofReport(part=part, n=n, lo=interval.lo, hi=interval.hi)
    for m in range(interval.lo, interval.hi + 1):
        check(m, n, report)
        report.checked += 1
    return report


def random_pairing_partition(rng, n):
    """A random partition in the domain of pairing_involution at index n."""
    tail = tuple(k for k in range(n - 3, 1, -1) if rng.random() < 0.5)
    head = (n,) if rng.random() < 0.5 else (n - 1, n - 2)
    return head + tail


def involution_trials(count, seed=0, n_range=(5, 40)):
    """Randomised checks of pairing_involution and complement_map.

    Returns a list of (map name, partition, n, message) for every failure.
    """
    rng = random.Random(seed)
    failures = []
    for _ in range(count):
        n = rng.randint(*n_range)
        p = random_pairing_partition(rng, n)
        q = pairing_involution(p, n)
        if pairing_involution(q, n) != p:
            failures.append(("pairing", p, n, "not an involution"))
        if partition_value(q) != partition_value(p):
            failures.append(("pairing", p, n, "value changed"))
        if abs(len(q) - len(p)) != 1:
            failures.append(("pairing", p, n, "part count did not change by one"))

        c = tuple(k for k in range(n, 1, -1) if rng.random() < 0.5)
        cc = complement_map(c, n)
        if complement_map(cc, n) != c:
            failures.append(("complement", c, n, "not an involution"))
        if partition_value(c) + partition_value(cc) != fib(n + 2) - 2:
            failures.append(("complement", c, n, "values do not sum to F_(n+2) - 2"))
        if len(c) + len(cc) != n - 1:
            failures.append(("complement", c, n, "part counts do not sum to n - 1"))
    return failures
