"""Integer consequences of the q-series identities at q -> 1.

Every alternating sum of products of central-ish binomial coefficients here
is evaluated in exact integer arithmetic, with the convention 1/n! = 0 for
n < 0 (so sums terminate by themselves).  The right-hand sides accumulate
as exact rationals and are asserted integral before being returned.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import comb, factorial

from .identities.framework import EngineError

__all__ = [
    "binom",
    "cor57_sides",
    "cor58a_sides",
    "cor58b_sides",
    "bino5_sides",
    "bino4_sides",
    "alt_power_sum",
    "divisibility_check",
    "general_alt_sum",
    "general_divisibility_check",
]


def binom(n: int, k: int) -> int:
    """Binomial coefficient as a total function: zero outside 0 <= k <= n."""
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


def _as_int(x: Fraction, label: str) -> int:
    if x.denominator != 1:
        raise EngineError(f"{label} accumulated to the non-integer {x}")
    return int(x)


def cor57_sides(l: int, m: int, n: int, u: int, v: int) -> tuple[int, int]:
    """Both sides of the five-fold alternating binomial identity."""
    if min(l, m, n, u, v) < 0:
        raise EngineError("parameters must be nonnegative")
    big = max(l, m, n, u, v)
    lhs = sum(
        (-1 if k & 1 else 1)
        * binom(l + m, l + k) * binom(m + n, m + k) * binom(n + l, n + k)
        * binom(u + v, u + k) * binom(u + v, v + k)
        for k in range(-big, big + 1)
    )
    acc = Fraction(0)
    for k in range(0, min(l, m, n) + 1):
        acc += Fraction(
            factorial(l + m + n - k) * factorial(u + v + k),
            factorial(k) * factorial(l - k) * factorial(m - k)
            * factorial(n - k) * factorial(u + k) * factorial(v + k),
        )
    rhs = binom(u + v, u) * acc
    return lhs, _as_int(rhs, "cor57 right side")


def cor58a_sides(l: int, m: int, n: int, u: int) -> tuple[int, int]:
    """The four-fold variant with a single central column."""
    if min(l, m, n, u) < 0:
        raise EngineError("parameters must be nonnegative")
    big = max(l, m, n, u)
    lhs = sum(
        (-1 if k & 1 else 1)
        * binom(l + m, l + k) * binom(m + n, m + k) * binom(n + l, n + k)
        * binom(2 * u, u + k)
        for k in range(-big, big + 1)
    )
    acc = Fraction(0)
    for k in range(0, min(l, m, n) + 1):
        acc += Fraction(
            factorial(l + m + n - k),
            factorial(k) * factorial(l - k) * factorial(m - k)
            * factorial(n - k) * factorial(u + k),
        )
    rhs = Fraction(factorial(2 * u), factorial(u)) * acc
    return lhs, _as_int(rhs, "cor58a right side")


def cor58b_sides(m: int, n: int, u: int, v: int) -> tuple[int, int]:
    """The four-fold variant with a doubled m+n column."""
    if min(m, n, u, v) < 0:
        raise EngineError("parameters must be nonnegative")
    big = max(m, n, u, v)
    lhs = sum(
        (-1 if k & 1 else 1)
        * binom(m + n, m + k) * binom(m + n, n + k)
        * binom(u + v, u + k) * binom(u + v, v + k)
        for k in range(-big, big + 1)
    )
    acc = Fraction(0)
    for k in range(0, min(m, n) + 1):
        acc += Fraction(
            factorial(m + n) * factorial(u + v + k),
            factorial(k) * factorial(m - k) * factorial(n - k)
            * factorial(u + k) * factorial(v + k),
        )
    rhs = binom(u + v, u) * acc
    return lhs, _as_int(rhs, "cor58b right side")


def alt_power_sum(n: int, power: int) -> int:
    """sum_{k=-n}^{n} (-1)^k binom(2n, n+k)^power."""
    if n < 0:
        raise EngineError("n must be nonnegative")
    return sum(
        (-1 if k & 1 else 1) * binom(2 * n, n + k) ** power
        for k in range(-n, n + 1)
    )


def bino5_sides(n: int) -> tuple[int, int, int]:
    """The fifth-power alternating sum and its two positive expansions."""
    lhs = alt_power_sum(n, 5)
    central = binom(2 * n, n)
    rhs1 = central * sum(
        binom(3 * n - k, n - k) * binom(2 * n + k, k) * binom(2 * n, n + k) ** 2
        for k in range(0, n + 1)
    )
    rhs2 = central * sum(
        binom(3 * n - k, n - k) * binom(2 * n + k, k) * binom(2 * n, k) ** 2
        for k in range(0, n + 1)
    )
    return lhs, rhs1, rhs2


def bino4_sides(n: int) -> tuple[int, int, int]:
    """The fourth-power alternating sum and its two positive expansions."""
    lhs = alt_power_sum(n, 4)
    central = binom(2 * n, n)
    rhs1 = central * sum(
        binom(3 * n - k, n - k) * binom(2 * n, n + k) * binom(n, k)
        for k in range(0, n + 1)
    )
    rhs2 = central * sum(
        binom(2 * n + k, k) * binom(2 * n, n + k) ** 2
        for k in range(0, n + 1)
    )
    return lhs, rhs1, rhs2


def divisibility_check(n: int, power: int) -> bool:
    """Is the alternating power sum a nonnegative multiple of binom(2n, n)?"""
    if power not in (4, 5):
        raise EngineError("the divisibility statement covers powers 4 and 5")
    s = alt_power_sum(n, power)
    central = binom(2 * n, n)
    return s >= 0 and s % central == 0


def general_alt_sum(entries: list[int] | tuple[int, ...]) -> int:
    """sum_k (-1)^k prod_i binom(n_i + n_{i+1}, n_i + k), cyclically."""
    ns = list(entries)
    if not ns:
        raise EngineError("need at least one entry")
    if min(ns) < 0:
        raise EngineError("entries must be nonnegative")
    cap = min(ns)
    total = 0
    for k in range(-cap, cap + 1):
        term = 1
        for i, a in enumerate(ns):
            b = ns[(i + 1) % len(ns)]
            term *= binom(a + b, a + k)
        total += -term if k & 1 else term
    return total


def general_divisibility_check(entries: list[int] | tuple[int, ...]) -> bool:
    """Nonnegative and divisible by every cyclic binom(n_j + n_{j+1}, n_j)."""
    ns = list(entries)
    s = general_alt_sum(ns)
    if s < 0:
        return False
    for i, a in enumerate(ns):
        b = ns[(i + 1) % len(ns)]
        d = binom(a + b, a)
        if d and s % d != 0:
            return False
    return True
