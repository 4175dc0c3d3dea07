"""Prime sieving and the prime-interval conditions used by the verifier.

A single shared table backs all queries.  It grows geometrically on demand
and is immutable once built, so lookups can be shared freely across threads
and worker processes; only construction is single-threaded.
"""

from __future__ import annotations

import threading
from bisect import bisect_right
from dataclasses import dataclass

from .errors import DomainError

__all__ = [
    "PrimeTable",
    "sieve_upto",
    "shared_table",
    "omega_set",
    "largest_prime_leq",
    "interval_prime_free",
    "goldbach_condition",
    "GoldbachReport",
]


class PrimeTable:
    """All primes up to ``limit``, ascending, with O(1) membership tests."""

    __slots__ = ("limit", "primes", "_members")

    def __init__(self, limit: int, primes: tuple[int, ...]):
        self.limit = limit
        self.primes = primes
        self._members = frozenset(primes)

    def __contains__(self, m: int) -> bool:
        if m > self.limit:
            raise DomainError(f"membership query {m} exceeds sieve limit {self.limit}")
        return m in self._members

    def __len__(self) -> int:
        return len(self.primes)


def sieve_upto(limit: int) -> PrimeTable:
    """Eratosthenes sieve of all primes <= limit (limit >= 2)."""
    if limit < 2:
        raise DomainError(f"sieve limit must be >= 2, got {limit}")
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    p = 2
    while p * p <= limit:
        if flags[p]:
            flags[p * p :: p] = bytearray(len(range(p * p, limit + 1, p)))
        p += 1
    return PrimeTable(limit, tuple(i for i in range(2, limit + 1) if flags[i]))


_lock = threading.Lock()
_table: PrimeTable | None = None


def shared_table(limit: int) -> PrimeTable:
    """Process-wide table covering at least ``limit``; grown geometrically."""
    global _table
    t = _table
    if t is not None and t.limit >= limit:
        return t
    with _lock:
        t = _table
        if t is None or t.limit < limit:
            target = max(limit, 2, 2 * t.limit if t else 0)
            t = sieve_upto(target)
            _table = t
    return t


def omega_set(n: int) -> list[int]:
    """Ascending primes t with n/2 < t <= n.

    The lower bound is strict and tested as 2*t > n to keep even n exact.
    """
    if n < 5:
        raise DomainError(f"omega_set requires n >= 5, got {n}")
    table = shared_table(n)
    lo = bisect_right(table.primes, n // 2)
    hi = bisect_right(table.primes, n)
    return [t for t in table.primes[lo:hi] if 2 * t > n]


def largest_prime_leq(n: int) -> int:
    """The largest prime <= n (n >= 2)."""
    if n < 2:
        raise DomainError(f"largest_prime_leq requires n >= 2, got {n}")
    table = shared_table(n)
    i = bisect_right(table.primes, n)
    return table.primes[i - 1]


def interval_prime_free(k: int, n: int) -> bool:
    """True iff the half-interval (k, n] contains no prime (k <= n)."""
    if k > n:
        raise DomainError(f"invalid interval ({k}, {n}]")
    if n < 2:
        return True
    return largest_prime_leq(n) <= k


@dataclass(frozen=True)
class GoldbachReport:
    """Whether n or n-1 splits into a sum of two primes, with one witness."""

    n: int
    holds: bool
    q1: int | None = None
    q2: int | None = None
    target: str | None = None  # "n" or "n-1"

    def to_json_dict(self) -> dict:
        out: dict = {"n": self.n, "holds": self.holds}
        if self.holds:
            out.update({"q1": self.q1, "q2": self.q2, "target": self.target})
        return out


def _two_prime_split(m: int, table: PrimeTable) -> tuple[int, int] | None:
    for q1 in table.primes:
        if 2 * q1 > m:
            return None
        if (m - q1) in table:
            return q1, m - q1
    return None


def goldbach_condition(n: int) -> GoldbachReport:
    """Check that n or n-1 is a sum of two primes (n >= 5).

    The witness has the smallest q1, preferring a decomposition of n itself.
    """
    if n < 5:
        raise DomainError(f"goldbach_condition requires n >= 5, got {n}")
    table = shared_table(n)
    for target, m in (("n", n), ("n-1", n - 1)):
        pair = _two_prime_split(m, table)
        if pair is not None:
            return GoldbachReport(n, True, pair[0], pair[1], target)
    return GoldbachReport(n, False)
