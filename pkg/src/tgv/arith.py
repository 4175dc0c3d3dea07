"""Exact arithmetic on positive integers kept in factored form.

Every group order, centralizer order and class size in this package is a
:class:`FactoredNat`: a positive integer represented by its prime
factorization.  Divisibility tests and exact quotients of factorial-sized
numbers are then cheap exponent comparisons instead of multi-kilobit
integer divisions, and values hash and compare canonically.

The empty factorization represents 1.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Mapping

from .errors import DomainError
from .primes import shared_table

__all__ = [
    "FactoredNat",
    "factor",
    "factorial_factored",
    "multiply",
    "divide_exact",
    "divides",
    "to_decimal",
]

Pairs = tuple[tuple[int, int], ...]


class FactoredNat:
    """A positive integer as an immutable sorted (prime, exponent) sequence.

    Instances are value objects: equality and hashing follow the
    factorization, and ``<`` orders by exact numeric magnitude, which gives
    every report in the package a deterministic total order.
    """

    __slots__ = ("_pairs", "_int")

    def __init__(self, pairs: Iterable[tuple[int, int]] = ()):
        pairs = tuple(pairs)
        last = 1
        for p, e in pairs:
            if p <= last or e < 1:
                raise DomainError(f"malformed factorization {pairs!r}")
            last = p
        self._pairs = pairs
        self._int: int | None = None

    # -- constructors ------------------------------------------------

    @classmethod
    def one(cls) -> "FactoredNat":
        return _ONE

    @classmethod
    def from_int(cls, m: int) -> "FactoredNat":
        return factor(m)

    @classmethod
    def from_exponents(cls, exponents: Mapping[int, int]) -> "FactoredNat":
        return cls(sorted((p, e) for p, e in exponents.items() if e != 0))

    @classmethod
    def from_json_dict(cls, obj: Mapping[str, int]) -> "FactoredNat":
        pairs = []
        for key, e in obj.items():
            p = int(key)
            if not _is_prime(p):
                raise DomainError(f"factorization key {key!r} is not prime")
            if not isinstance(e, int) or e < 1:
                raise DomainError(f"bad exponent {e!r} for prime {p}")
            pairs.append((p, e))
        return cls(sorted(pairs))

    # -- views -------------------------------------------------------

    @property
    def pairs(self) -> Pairs:
        return self._pairs

    @property
    def exponents(self) -> dict[int, int]:
        return dict(self._pairs)

    def exponent(self, p: int) -> int:
        for q, e in self._pairs:
            if q == p:
                return e
            if q > p:
                break
        return 0

    def is_one(self) -> bool:
        return not self._pairs

    def to_json_dict(self) -> dict[str, int]:
        """JSON form: decimal-string primes as keys, ascending numerically."""
        return {str(p): e for p, e in self._pairs}

    # -- arithmetic --------------------------------------------------

    def __mul__(self, other: "FactoredNat") -> "FactoredNat":
        return multiply(self, other)

    def pow(self, k: int) -> "FactoredNat":
        if k < 0:
            raise DomainError("negative power of a FactoredNat")
        if k == 0:
            return _ONE
        return FactoredNat((p, e * k) for p, e in self._pairs)

    def divide_exact(self, other: "FactoredNat") -> "FactoredNat":
        return divide_exact(self, other)

    def divides(self, other: "FactoredNat") -> bool:
        return divides(self, other)

    def to_int(self) -> int:
        v = self._int
        if v is None:
            v = 1
            for p, e in self._pairs:
                v *= p**e
            self._int = v
        return v

    __int__ = to_int

    def to_decimal(self) -> str:
        return str(self.to_int())

    # -- value semantics ----------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FactoredNat) and self._pairs == other._pairs

    def __hash__(self) -> int:
        return hash(self._pairs)

    def __lt__(self, other: "FactoredNat") -> bool:
        return self.to_int() < other.to_int()

    def __le__(self, other: "FactoredNat") -> bool:
        return self.to_int() <= other.to_int()

    def __gt__(self, other: "FactoredNat") -> bool:
        return self.to_int() > other.to_int()

    def __ge__(self, other: "FactoredNat") -> bool:
        return self.to_int() >= other.to_int()

    def __repr__(self) -> str:
        if not self._pairs:
            return "FactoredNat(1)"
        body = " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self._pairs)
        return f"FactoredNat({body})"


_ONE = FactoredNat()


def _is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m % 2 == 0:
        return m == 2
    d = 3
    while d * d <= m:
        if m % d == 0:
            return False
        d += 2
    return True


def factor(m: int) -> FactoredNat:
    """Factor a positive machine integer by trial division."""
    if m < 1:
        raise DomainError(f"cannot factor {m}; need a positive integer")
    pairs = []
    for p in (2, 3):
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            pairs.append((p, e))
    d = 5
    while d * d <= m:
        for p in (d, d + 2):  # 6k-1, 6k+1
            if m % p == 0:
                e = 0
                while m % p == 0:
                    m //= p
                    e += 1
                pairs.append((p, e))
        d += 6
    if m > 1:
        pairs.append((m, 1))
    return FactoredNat(pairs)


@lru_cache(maxsize=4096)
def factorial_factored(n: int) -> FactoredNat:
    """n! in factored form; the exponent of p is sum_{k>=1} floor(n/p^k)."""
    if n < 0:
        raise DomainError(f"factorial of negative {n}")
    if n < 2:
        return _ONE
    pairs = []
    for p in shared_table(n).primes:
        if p > n:
            break
        e = 0
        q = p
        while q <= n:
            e += n // q
            q *= p
        pairs.append((p, e))
    return FactoredNat(pairs)


def multiply(a: FactoredNat, b: FactoredNat) -> FactoredNat:
    """Exponentwise sum of two factorizations."""
    if a.is_one():
        return b
    if b.is_one():
        return a
    out = []
    ai, bi = iter(a.pairs), iter(b.pairs)
    x = next(ai, None)
    y = next(bi, None)
    while x is not None and y is not None:
        if x[0] < y[0]:
            out.append(x)
            x = next(ai, None)
        elif x[0] > y[0]:
            out.append(y)
            y = next(bi, None)
        else:
            out.append((x[0], x[1] + y[1]))
            x = next(ai, None)
            y = next(bi, None)
    while x is not None:
        out.append(x)
        x = next(ai, None)
    while y is not None:
        out.append(y)
        y = next(bi, None)
    return FactoredNat(out)


def divide_exact(a: FactoredNat, b: FactoredNat) -> FactoredNat:
    """Exact quotient a / b; raises DomainError naming the offending prime."""
    if b.is_one():
        return a
    out = []
    ai = iter(a.pairs)
    x = next(ai, None)
    for p, e in b.pairs:
        while x is not None and x[0] < p:
            out.append(x)
            x = next(ai, None)
        if x is None or x[0] != p or x[1] < e:
            raise DomainError(f"not an exact divisor: prime {p} has insufficient exponent")
        if x[1] > e:
            out.append((p, x[1] - e))
        x = next(ai, None)
    while x is not None:
        out.append(x)
        x = next(ai, None)
    return FactoredNat(out)


def divides(a: FactoredNat, b: FactoredNat) -> bool:
    """True iff every exponent of a is <= the matching exponent of b."""
    bp = b.pairs
    j = 0
    nb = len(bp)
    for p, e in a.pairs:
        while j < nb and bp[j][0] < p:
            j += 1
        if j == nb or bp[j][0] != p or bp[j][1] < e:
            return False
        j += 1
    return True


def to_decimal(a: FactoredNat) -> str:
    """Exact decimal expansion of a factored value."""
    return a.to_decimal()
