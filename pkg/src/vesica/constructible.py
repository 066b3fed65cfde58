"""Which regular n-gons admit exact ruler-and-compass constructions.

A regular n-gon is constructible exactly when n factors as a power of two
times a product of distinct Fermat primes (primes of the form 2^(2^m) + 1).
The verdict carries the factorization as evidence, or the first obstruction:
a repeated odd prime, or an odd prime that is not a Fermat prime.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "Obstruction",
    "ConstructibilityVerdict",
    "is_fermat_prime",
    "check",
    "constructible_up_to",
    "FACTOR_LIMIT",
]

# Trial-division factorization is the documented cutoff; inputs above it
# raise OverflowError rather than silently taking minutes.
FACTOR_LIMIT = 2 ** 32

# Deterministic Miller-Rabin witness set, proven complete below 3.3e24,
# comfortably covering the 2^64 range is_fermat_prime supports.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_PRIMALITY_LIMIT = 2 ** 64


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _is_power_of_two(x: int) -> bool:
    return x > 0 and x & (x - 1) == 0


def is_fermat_prime(p: int) -> bool:
    """True iff p is prime and p - 1 is a power of two (and p > 2).

    For a prime p, p - 1 = 2^e forces e itself to be a power of two (2^e + 1
    is composite whenever e has an odd factor), so this is exactly the
    Fermat-prime condition without hardcoding the five known instances.
    """
    if p < 2:
        raise ValueError(f"primality is defined for integers >= 2, got {p}")
    if p > _PRIMALITY_LIMIT:
        raise OverflowError(f"primality test supported up to 2^64, got {p}")
    return p > 2 and _is_power_of_two(p - 1) and _is_prime(p)


@dataclass(frozen=True, slots=True)
class Obstruction:
    """Why an n-gon is not constructible."""

    kind: str  # "repeated-prime" | "non-fermat-prime"
    prime: int

    def describe(self) -> str:
        if self.kind == "repeated-prime":
            return f"{self.prime} appears twice"
        return f"{self.prime} is not a Fermat prime"


@dataclass(frozen=True, slots=True)
class ConstructibilityVerdict:
    """Factorization evidence for one n: n = 2^power_of_two * prod(odd_primes)
    with their exponents; constructible iff every odd prime is a Fermat prime
    appearing exactly once."""

    n: int
    constructible: bool
    power_of_two: int
    odd_primes: tuple[int, ...]  # distinct, ascending
    obstruction: Obstruction | None = None

    def describe(self) -> str:
        if self.constructible:
            parts = [f"2^{self.power_of_two}"] if self.power_of_two else []
            parts += [str(p) for p in self.odd_primes]
            return f"{self.n}: constructible ({self.n} = {' * '.join(parts)})"
        return f"{self.n}: NOT constructible ({self.obstruction.describe()})"


def _factor(n: int) -> list[tuple[int, int]]:
    """Trial-division factorization as (prime, exponent) pairs, ascending."""
    factors = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
        p += 1 if p == 2 else 2
    if m > 1:
        factors.append((m, 1))
    return factors


def check(n: int) -> ConstructibilityVerdict:
    """Constructibility verdict for the regular n-gon, n >= 3."""
    if n < 3:
        raise ValueError(f"polygons need at least 3 sides, got n={n}")
    if n > FACTOR_LIMIT:
        raise OverflowError(f"factorization supported up to 2^32, got {n}")
    factors = _factor(n)
    power_of_two = 0
    odd_primes: list[int] = []
    obstruction = None
    for prime, exponent in factors:
        if prime == 2:
            power_of_two = exponent
            continue
        odd_primes.append(prime)
        if obstruction is None and exponent > 1:
            obstruction = Obstruction("repeated-prime", prime)
        elif obstruction is None and not is_fermat_prime(prime):
            obstruction = Obstruction("non-fermat-prime", prime)
    return ConstructibilityVerdict(
        n=n,
        constructible=obstruction is None,
        power_of_two=power_of_two,
        odd_primes=tuple(odd_primes),
        obstruction=obstruction,
    )


def constructible_up_to(limit: int) -> list[int]:
    """All constructible n in [3, limit], ascending."""
    if limit < 3:
        raise ValueError(f"limit must be at least 3, got {limit}")
    if limit > FACTOR_LIMIT:
        raise OverflowError(f"factorization supported up to 2^32, got {limit}")
    return [n for n in range(3, limit + 1) if check(n).constructible]
