"""Closed-form least periods.

``T_k`` is the least period of ``g_k(n) = n(n+1)...(n+k) / lcm(n, ..., n+k)``::

    T_k = prod_{p <= k} p^delta_p(k)

where ``delta_p(k)`` is 0 when ``v_p(k+1)`` reaches the largest power of
``p`` not exceeding ``k``, and that exponent otherwise.  For ``f = ax + b``
the same product applies with ``delta_p = 0`` also for ``p | a``; the spaced
product ``n(n+a)...(n+ka) / lcm`` has least period ``a * T_k``.
"""

from __future__ import annotations

import math

from . import arith
from .arith import Factorization
from .polyarith import IntPoly, perfect_power_decompose


def _top_exponent(k: int, p: int) -> int:
    # largest e with p**e <= k, i.e. max v_p(i) over 1 <= i <= k
    e, q = 0, p
    while q <= k:
        e += 1
        q *= p
    return e


def _primes_upto(k: int) -> list[int]:
    return [p for p in range(2, k + 1) if arith.is_prime(p)]


def delta_p(k: int, p: int) -> int:
    if not arith.is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p > k:
        raise ValueError(f"p = {p} exceeds k = {k}")
    top = _top_exponent(k, p)
    return 0 if arith.valuation(k + 1, p) >= top else top


def farhi_kane_T(k: int) -> Factorization:
    """Factored least period of ``g_k``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return Factorization.from_dict({p: delta_p(k, p) for p in _primes_upto(k)})


def linear_T(k: int, a: int, b: int) -> Factorization:
    """Factored least period of the Farhi function of ``a*x + b``."""
    if a < 1:
        raise ValueError("a must be positive")
    if math.gcd(a, b) != 1:
        raise ValueError(f"gcd({a}, {b}) != 1")
    return Factorization.from_dict({p: delta_p(k, p) for p in _primes_upto(k) if a % p})


def spaced_T(k: int, a: int) -> Factorization:
    if a < 1:
        raise ValueError("a must be positive")
    return farhi_kane_T(k) * arith.factorize(a)


def g_spaced_eval(k: int, a: int, n: int) -> int:
    """``|n (n+a) ... (n+ka)| / lcm(n, n+a, ..., n+ka)`` for ``n >= 1``."""
    if n < 1:
        raise ValueError("n must be positive")
    vals = [n + i * a for i in range(k + 1)]
    return math.prod(vals) // math.lcm(*vals)


def g_k_recursive(k: int, n: int) -> int:
    """``g_k(n)`` through ``g_k(n) = gcd(k!, (n+k) g_{k-1}(n))`` with ``g_0 = 1``."""
    if n < 1:
        raise ValueError("n must be positive")
    g, fact = 1, 1
    for j in range(1, k + 1):
        fact *= j
        g = math.gcd(fact, (n + j) * g)
    return g


def reduce_perfect_power(f: IntPoly, k: int) -> tuple[IntPoly, int]:
    """Strip a perfect power: periods of ``f = base^r`` equal those of ``base``.

    The Farhi values satisfy ``g_{k,f}(n) = g_{k,base}(n)^r``.
    """
    return perfect_power_decompose(f)
