"""Prime sets and pi-part arithmetic."""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def prime_factors(n: int) -> tuple[int, ...]:
    """Distinct prime divisors of n >= 1, ascending."""
    if n < 1:
        raise ValueError("n must be >= 1")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return tuple(out)


@dataclass(frozen=True)
class PrimeSet:
    """A nonempty set of primes; the complement set is implicit."""

    primes: frozenset[int]

    def __post_init__(self):
        if not self.primes:
            raise ValueError("prime set must be nonempty")
        for p in self.primes:
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")

    @classmethod
    def of(cls, *primes: int) -> "PrimeSet":
        return cls(frozenset(primes))

    @classmethod
    def from_string(cls, text: str) -> "PrimeSet":
        """Parse a comma-separated prime list like ``"2,3"``."""
        try:
            primes = frozenset(int(tok) for tok in text.split(",") if tok.strip())
        except ValueError:
            raise ValueError(f"malformed prime list: {text!r}") from None
        return cls(primes)

    def sorted(self) -> tuple[int, ...]:
        return tuple(sorted(self.primes))

    def __iter__(self):
        return iter(self.sorted())

    def __contains__(self, p: int) -> bool:
        return p in self.primes

    def __str__(self) -> str:
        return ",".join(map(str, self.sorted()))


def pi_part(n: int, pi: PrimeSet) -> int:
    """Product over p in pi of the largest p-power dividing n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    out = 1
    for p in pi:
        while n % p == 0:
            n //= p
            out *= p
    return out


def is_pi_number(n: int, pi: PrimeSet) -> bool:
    """True iff every prime factor of n lies in pi."""
    return pi_part(n, pi) == n


def is_pi_prime_number(n: int, pi: PrimeSet) -> bool:
    """True iff no prime factor of n lies in pi."""
    return pi_part(n, pi) == 1
