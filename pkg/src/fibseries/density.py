"""How often a(m) vanishes.

alpha_n counts the nonzero coefficients among a(0), ..., a(F_n - 1).  The
interval recursion gives alpha_{n+1} = alpha_n + 2 alpha_{n-3} - 1 for
n >= 5, whose characteristic polynomial x^4 - x^3 - 2 has dominant root
r1 ~ 1.5437 < golden ratio.  So alpha_n / F_n -> 0 and the zero density
tends to 1.

Densities and ratios are exact Fractions.  Root finding and anything
multiplied by a power of r1 uses IEEE double precision (53-bit mantissa).
"""

import cmath
import math
import sys
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from fibseries.engine import decompose, stream
from fibseries.fibonacci import fib, locate

# alpha_2..alpha_5: nonzero counts of [1], [1,-1], [1,-1,-1], [1,-1,-1,0,1].
ALPHA_SEEDS = {2: 1, 3: 2, 4: 3, 5: 4}

GOLDEN_RATIO = (1 + math.sqrt(5)) / 2


class ConvergenceError(ArithmeticError):
    pass


@dataclass(frozen=True)
class AlphaRecord:
    n: int
    alpha: int
    fib_n: int

    @property
    def ratio(self):
        return Fraction(self.alpha, self.fib_n)

    @property
    def zero_density(self):
        """Fraction of zeros among a(0..F_n - 1)."""
        return 1 - self.ratio


def alpha_recurrence(n_max):
    """AlphaRecords for n = 2..n_max from the seeds and the recurrence."""
    if n_max < 5:
        raise ValueError(f"n_max must be >= 5, got {n_max}")
    alpha = dict(ALPHA_SEEDS)
    for n in range(5, n_max):
        alpha[n + 1] = alpha[n] + 2 * alpha[n - 3] - 1
    return [AlphaRecord(n, alpha[n], fib(n)) for n in range(2, n_max + 1)]


def alpha_direct(n):
    """Nonzero count among a(0..F_n - 1), taken from the coefficient stream."""
    return int(np.count_nonzero(stream(fib(n) - 1).values))


def subinterval_nonzeros(n, coeffs=None):
    """Nonzero counts of a(m) on sub1, sub2, sub3 of [F_n, F_{n+1})."""
    d = decompose(n)
    if coeffs is None:
        coeffs = stream(d.sub3.hi)
    vals = coeffs.values
    return tuple(
        int(np.count_nonzero(vals[iv.lo : iv.hi + 1])) if not iv.empty else 0
        for iv in (d.sub1, d.sub2, d.sub3)
    )


def zero_density(m):
    """Exact fraction of m' in [0, m] with a(m') = 0."""
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    vals = stream(m).values
    return Fraction(int(vals.size - np.count_nonzero(vals)), m + 1)


def _bracket_index(m):
    # n with F_{n-1} <= m < F_n.  m = 0 sits below F_2 = 1, so it takes n = 2.
    return 2 if m == 0 else locate(m) + 1


def density_bound_check(m):
    """True when p_m >= 1 - alpha_n/(m+1) > 1 - 2 alpha_n/F_n, evaluated exactly."""
    n = _bracket_index(m)
    alpha = alpha_direct(n)
    p_m = zero_density(m)
    middle = 1 - Fraction(alpha, m + 1)
    lower = 1 - Fraction(2 * alpha, fib(n))
    return p_m >= middle > lower


def density_bound_failures(m_max):
    """Every m in [0, m_max] where the bound chain fails (normally empty).

    Same exact test as density_bound_check, cross-multiplied so that one
    coefficient stream serves the whole range.
    """
    if m_max < 0:
        raise ValueError(f"m_max must be >= 0, got {m_max}")
    top = _bracket_index(m_max)
    nz = np.cumsum(stream(fib(top) - 1).values != 0, dtype=np.int64)
    failures = []
    lo = 0
    for n in range(2, top + 1):
        hi = min(fib(n) - 1, m_max)  # m in [lo, hi] all bracket to n
        if hi < lo:
            continue
        alpha = int(nz[fib(n) - 1])
        m = np.arange(lo, hi + 1, dtype=np.int64)
        # zeros/(m+1) >= 1 - alpha/(m+1)  <=>  nonzeros(0..m) <= alpha
        first = nz[lo : hi + 1] <= alpha
        # alpha/(m+1) < 2 alpha/F_n  <=>  F_n < 2(m+1), as alpha >= 1
        second = fib(n) < 2 * (m + 1)
        failures.extend(int(x) for x in m[~(first & second)])
        lo = hi + 1
    return failures


@dataclass(frozen=True)
class RootSet:
    r1: float
    r2: int
    r3: complex
    r4: complex
    lam: float = GOLDEN_RATIO

    def as_tuple(self):
        return (self.r1, self.r2, self.r3, self.r4)

    @property
    def residuals(self):
        return tuple(abs(char_poly(r)) for r in self.as_tuple())


def char_poly(x):
    return x**4 - x**3 - 2


def _newton(f, df, x, tol, budget):
    for _ in range(budget):
        step = f(x) / df(x)
        x -= step
        if abs(step) <= tol * max(1.0, abs(x)):
            return x
    raise ConvergenceError(f"Newton did not settle within {budget} iterations")


def roots(tolerance=1e-12, max_iter=200):
    """Roots of x^4 - x^3 - 2.

    -1 is exact.  Dividing it out leaves x^3 - 2x^2 + 2x - 2, whose one real
    root is bracketed on (1, 2) by bisection and polished by Newton; the
    remaining quadratic gives the complex pair.
    """
    if tolerance <= 0:
        raise ValueError("tolerance must be positive")

    def cubic(x):
        return ((x - 2) * x + 2) * x - 2

    def dcubic(x):
        return (3 * x - 4) * x + 2

    lo, hi = 1.0, 2.0
    for _ in range(max_iter):
        mid = (lo + hi) / 2
        if cubic(mid) < 0:
            lo = mid
        else:
            hi = mid
        if hi - lo < 1e-6:
            break
    else:
        raise ConvergenceError("bisection did not shrink the bracket")
    r1 = _newton(cubic, dcubic, (lo + hi) / 2, 4 * sys.float_info.epsilon, max_iter)

    # cubic / (x - r1) = x^2 + (r1 - 2) x + (r1^2 - 2 r1 + 2)
    b, c = r1 - 2, r1 * r1 - 2 * r1 + 2
    disc = cmath.sqrt(b * b - 4 * c)
    r3 = (-b + disc) / 2
    if r3.imag < 0:
        r3 = r3.conjugate()
    r3 = _newton(char_poly, lambda x: 4 * x**3 - 3 * x**2, r3, 4 * sys.float_info.epsilon, max_iter)
    r3 = complex(r3.real, abs(r3.imag))

    found = RootSet(r1=r1, r2=-1, r3=r3, r4=r3.conjugate())
    worst = max(found.residuals)
    if worst >= tolerance:
        raise ConvergenceError(f"root residual {worst:.3e} exceeds tolerance {tolerance:.3e}")
    return found


@dataclass(frozen=True)
class ReportRow:
    n: int
    alpha: int
    fib_n: int
    ratio: Fraction
    alpha_over_r1n: float
    step_ratio: float  # (alpha_{n+1}/F_{n+1}) / (alpha_n/F_n)


def asymptotic_report(n_max, root_set=None):
    """Trend table comparing alpha_n with r1^n and F_n."""
    if n_max < 10:
        raise ValueError(f"n_max must be >= 10, got {n_max}")
    r1 = (root_set or roots()).r1
    recs = alpha_recurrence(n_max + 1)
    return [
        ReportRow(rec.n, rec.alpha, rec.fib_n, rec.ratio, rec.alpha / r1**rec.n, float(nxt.ratio / rec.ratio))
        for rec, nxt in zip(recs, recs[1:])
    ]
