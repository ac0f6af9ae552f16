"""Integer number theory on arbitrary-precision ints.

p-adic valuations, gcd/lcm over lists, complete factorization (trial
division, then Pollard rho with Miller-Rabin certification) and divisor
enumeration.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import lru_cache, reduce
from itertools import product
from typing import Iterable, Iterator

TRIAL_BOUND = 10**6

# Deterministic for every n < 3.3e24, which covers all 64-bit inputs.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_DETERMINISTIC_LIMIT = 3_317_044_064_679_887_385_961_981
_MR_RANDOM_ROUNDS = 40


@lru_cache(maxsize=1)
def _small_primes() -> tuple[int, ...]:
    sieve = bytearray([1]) * (TRIAL_BOUND + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(TRIAL_BOUND) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, TRIAL_BOUND + 1, i)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


def _strong_probable_prime(n: int, a: int, d: int, s: int) -> bool:
    x = pow(a, d, n)
    if x in (1, n - 1):
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int) -> bool:
    """Miller-Rabin; deterministic below 3.3e24, 40 seeded random bases above."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if n < _MR_DETERMINISTIC_LIMIT:
        bases: Iterable[int] = _MR_BASES
    else:
        rng = random.Random(n)
        bases = [rng.randrange(2, n - 1) for _ in range(_MR_RANDOM_ROUNDS)]
    return all(_strong_probable_prime(n, a, d, s) for a in bases)


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")


def v_p(n: int, p: int) -> int:
    """Exponent of the prime ``p`` in ``|n|``."""
    if n == 0:
        raise ValueError("valuation of 0 is infinite")
    _require_prime(p)
    return valuation(n, p)


def valuation(n: int, p: int) -> int:
    # Unchecked variant for hot loops; caller guarantees n != 0 and p prime.
    n = abs(n)
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def big_gcd(xs: Iterable[int]) -> int:
    xs = list(xs)
    if not xs:
        raise ValueError("gcd of an empty list")
    return math.gcd(*xs)


def big_lcm(xs: Iterable[int]) -> int:
    xs = list(xs)
    if not xs:
        raise ValueError("lcm of an empty list")
    if any(x == 0 for x in xs):
        raise ValueError("lcm with a zero entry")
    return math.lcm(*xs)


@dataclass(frozen=True)
class Factorization:
    """Prime power decomposition, primes ascending."""

    pairs: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        primes = [p for p, _ in self.pairs]
        if primes != sorted(set(primes)):
            raise ValueError("primes must be strictly ascending")
        for p, e in self.pairs:
            if e < 1 or not is_prime(p):
                raise ValueError(f"bad prime power {p}^{e}")

    @classmethod
    def from_dict(cls, exps: dict[int, int]) -> Factorization:
        return cls(tuple(sorted((p, e) for p, e in exps.items() if e)))

    @property
    def value(self) -> int:
        return math.prod(p**e for p, e in self.pairs)

    def as_dict(self) -> dict[int, int]:
        return dict(self.pairs)

    def primes(self) -> list[int]:
        return [p for p, _ in self.pairs]

    def exponent(self, p: int) -> int:
        return self.as_dict().get(p, 0)

    def __mul__(self, other: Factorization) -> Factorization:
        exps = self.as_dict()
        for p, e in other.pairs:
            exps[p] = exps.get(p, 0) + e
        return Factorization.from_dict(exps)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)

    def __str__(self) -> str:
        return format_factored(self)


def format_factored(fac: Factorization) -> str:
    """Render as ``2^2·3·5`` (``1`` for the empty product)."""
    if not fac.pairs:
        return "1"
    return "·".join(str(p) if e == 1 else f"{p}^{e}" for p, e in fac.pairs)


def _pollard_rho(n: int, rng: random.Random) -> int:
    # Brent's cycle detection with batched gcds.
    if n % 2 == 0:
        return 2
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def factorize(n: int) -> Factorization:
    """Complete prime factorization of ``n >= 1``."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    exps: dict[int, int] = {}
    for p in _small_primes():
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            exps[p] = e
    if n > 1:
        rng = random.Random(0x5EED)
        stack = [n]
        while stack:
            m = stack.pop()
            if m == 1:
                continue
            if is_prime(m):
                exps[m] = exps.get(m, 0) + 1
                continue
            d = _pollard_rho(m, rng)
            stack.extend((d, m // d))
    return Factorization.from_dict(exps)


def divisors(fac: Factorization) -> list[int]:
    """All divisors of the factored value, ascending."""
    powers = [[p**i for i in range(e + 1)] for p, e in fac.pairs]
    return sorted(math.prod(combo) for combo in product(*powers))


def lcm_range(k: int) -> int:
    """lcm(1, 2, ..., k); 1 for k <= 1."""
    return reduce(math.lcm, range(1, k + 1), 1)
