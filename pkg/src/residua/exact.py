"""Exact arithmetic helpers: integer number theory, k-th roots as symbols,
and rational certificates for transcendental constants.

Every comparison that decides a verdict elsewhere in the package reduces to
integer power cross-multiplication here; floating point (50-digit mpmath)
appears only in rendered reports and in candidate selection with an explicit
separation guard.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

import mpmath

from .errors import ResiduaError

#: working precision (decimal digits) for all mpmath evaluation
PRECISION_DPS = 50

#: two candidate values closer than this are treated as a tie and rejected
SEPARATION_GUARD = mpmath.mpf("1e-30")


def mp_context():
    ctx = mpmath.mp.clone()
    ctx.dps = PRECISION_DPS
    return ctx


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization as {prime: exponent}."""
    if n < 1:
        raise ResiduaError(f"cannot factorize {n}")
    out: dict[int, int] = {}
    for p in [2, 3]:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    d = 5
    while d * d <= n:
        for p in (d, d + 2):
            while n % p == 0:
                out[p] = out.get(p, 0) + 1
                n //= p
        d += 6
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime_power(n: int):
    """Return the prime p if n = p^k (k >= 1), else None."""
    factors = factorize(n) if n > 1 else {}
    if len(factors) == 1:
        return next(iter(factors))
    return None


@dataclass(frozen=True)
class Root:
    """The exact positive real radicand**(1/index)."""

    radicand: int
    index: int

    def __post_init__(self):
        if self.radicand < 1 or self.index < 1:
            raise ResiduaError(f"invalid root {self.radicand}^(1/{self.index})")

    def mpf(self, ctx=None):
        ctx = ctx or mp_context()
        return ctx.root(ctx.mpf(self.radicand), self.index)

    def __float__(self) -> float:
        return float(self.mpf())

    def compare(self, other: "Root") -> int:
        """Exact three-way comparison via integer cross powers."""
        left = self.radicand ** other.index
        right = other.radicand ** self.index
        return (left > right) - (left < right)

    def __str__(self) -> str:
        if self.index == 1:
            return str(self.radicand)
        return f"{self.radicand}^(1/{self.index})"


def root_equals(a: Root, b: Root) -> bool:
    return a.compare(b) == 0


def power_vs_root_power(value: int, root: Root, exponent: int) -> int:
    """Exact sign of value - root**exponent, via cross-multiplication.

    Compares value^index against radicand^exponent.
    """
    left = value ** root.index
    right = root.radicand ** exponent
    return (left > right) - (left < right)


def max_by_root(items, key):
    """Exact argmax of Root-valued key over items; earlier item wins ties."""
    best = None
    best_root = None
    for item in items:
        r = key(item)
        if best_root is None or r.compare(best_root) > 0:
            best, best_root = item, r
    return best, best_root


def simplest_fraction_in_interval(lo: Fraction, hi: Fraction) -> Fraction:
    """Smallest-denominator fraction in [lo, hi], by continued-fraction descent."""
    if lo > hi:
        raise ResiduaError("empty interval")
    if lo <= 0 <= hi:
        return Fraction(0)
    if hi < 0:
        return -simplest_fraction_in_interval(-hi, -lo)
    # both endpoints positive from here on
    ceil_lo = -((-lo.numerator) // lo.denominator)
    if ceil_lo <= hi:
        return Fraction(ceil_lo)
    a = lo.numerator // lo.denominator
    return a + 1 / simplest_fraction_in_interval(1 / (hi - a), 1 / (lo - a))


def rational_upper_bound(value, max_error: Fraction, safety: Fraction) -> Fraction:
    """Smallest-denominator fraction in [value + safety, value + max_error].

    `value` is a high-precision mpf; the returned fraction strictly exceeds
    it by at least `safety` and by less than `max_error`.  The float round
    trip is exact and loses at most ~1e-16 relative to the mpf, far below
    the safety margin callers pass in.
    """
    exact = Fraction(float(value))
    return simplest_fraction_in_interval(exact + safety, exact + max_error)


def assert_separated(a, b, guard=SEPARATION_GUARD):
    """Fail loudly when two high-precision values are too close to order."""
    if abs(a - b) <= guard:
        raise ResiduaError(
            f"values {a} and {b} are within the separation guard {guard}; "
            "refusing to order them numerically"
        )


def exact_min_by_value(items, value_fn):
    """Argmin over mpf values with separation guard; returns (item, value)."""
    best = None
    best_value = None
    for item in items:
        v = value_fn(item)
        if best is None:
            best, best_value = item, v
            continue
        assert_separated(v, best_value)
        if v < best_value:
            best, best_value = item, v
    if best is None:
        raise ResiduaError("empty candidate set")
    return best, best_value


def isqrt_exact_ge(a: int, b: int) -> bool:
    """Exact test a >= sqrt(b) for nonnegative integers."""
    return a >= 0 and a * a >= b


def isqrt_exact_eq(a: int, b: int) -> bool:
    """Exact test a == sqrt(b)."""
    return a >= 0 and a * a == b


def integer_nth_root(n: int, k: int) -> int:
    """Floor of the k-th root of n."""
    if n < 0 or k < 1:
        raise ResiduaError("integer_nth_root needs n >= 0, k >= 1")
    if n == 0:
        return 0
    if k == 1:
        return n
    if k == 2:
        return isqrt(n)
    x = int(round(n ** (1.0 / k)))
    while x > 0 and x ** k > n:
        x -= 1
    while (x + 1) ** k <= n:
        x += 1
    return x
