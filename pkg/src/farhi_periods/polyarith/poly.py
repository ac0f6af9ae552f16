"""Dense univariate polynomials over Z and Q."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .. import arith

# Degree of the zero polynomial. Compares below every integer degree.
NEG_INF = -math.inf


def _trim(coeffs: Iterable) -> tuple:
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


@dataclass(frozen=True)
class IntPoly:
    """Integer polynomial, ``coeffs[i]`` is the coefficient of ``x**i``."""

    coeffs: tuple[int, ...] = ()

    def __init__(self, coeffs: Sequence[int] = ()):
        cs = _trim(coeffs)
        if not all(isinstance(c, int) for c in cs):
            raise TypeError("IntPoly coefficients must be ints")
        object.__setattr__(self, "coeffs", cs)

    @classmethod
    def const(cls, c: int) -> IntPoly:
        return cls([c])

    @classmethod
    def x(cls) -> IntPoly:
        return cls([0, 1])

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def content(self) -> int:
        return math.gcd(*self.coeffs) if self.coeffs else 0

    def __call__(self, n: int) -> int:
        return poly_eval(self, n)

    def __add__(self, other: IntPoly) -> IntPoly:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPoly([c + (b[i] if i < len(b) else 0) for i, c in enumerate(a)])

    def __neg__(self) -> IntPoly:
        return IntPoly([-c for c in self.coeffs])

    def __sub__(self, other: IntPoly) -> IntPoly:
        return self + (-other)

    def __mul__(self, other) -> IntPoly:
        if isinstance(other, int):
            return IntPoly([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, r: int) -> IntPoly:
        if r < 0:
            raise ValueError("negative power")
        result, base = IntPoly([1]), self
        while r:
            if r & 1:
                result = result * base
            base = base * base
            r >>= 1
        return result

    def shift_up(self, j: int) -> IntPoly:
        """Multiply by ``x**j``."""
        if not self.coeffs:
            return self
        return IntPoly((0,) * j + self.coeffs)

    def to_rat(self) -> RatPoly:
        return RatPoly([Fraction(c) for c in self.coeffs])

    def __str__(self) -> str:
        from .text import poly_format

        return poly_format(self)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)!r})"


@dataclass(frozen=True)
class RatPoly:
    """Polynomial over Q with reduced Fraction coefficients."""

    coeffs: tuple[Fraction, ...] = ()

    def __init__(self, coeffs: Sequence = ()):
        object.__setattr__(self, "coeffs", _trim(Fraction(c) for c in coeffs))

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def monic(self) -> RatPoly:
        lc = self.lc
        return RatPoly([c / lc for c in self.coeffs])

    def divmod(self, other: RatPoly) -> tuple[RatPoly, RatPoly]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dg = len(other.coeffs) - 1
        q = [Fraction(0)] * max(len(rem) - dg, 0)
        lc = other.lc
        for i in range(len(rem) - 1, dg - 1, -1):
            c = rem[i] / lc
            if c:
                q[i - dg] = c
                for j, oc in enumerate(other.coeffs):
                    rem[i - dg + j] -= c * oc
        return RatPoly(q), RatPoly(rem[:dg] if dg else [])

    def __repr__(self) -> str:
        return f"RatPoly({[str(c) for c in self.coeffs]!r})"


def poly_eval(f: IntPoly, n: int) -> int:
    acc = 0
    for c in reversed(f.coeffs):
        acc = acc * n + c
    return acc


def poly_shift(f: IntPoly, i: int) -> IntPoly:
    """Return ``f(x + i)`` by repeated synthetic division (Taylor shift)."""
    cs = list(f.coeffs)
    n = len(cs)
    for k in range(n - 1):
        for j in range(n - 2, k - 1, -1):
            cs[j] += i * cs[j + 1]
    return IntPoly(cs)


def rat_gcd(f: IntPoly | RatPoly, g: IntPoly | RatPoly) -> RatPoly:
    """Monic gcd in Q[x]."""
    a = f.to_rat() if isinstance(f, IntPoly) else f
    b = g.to_rat() if isinstance(g, IntPoly) else g
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    return a.monic()


def coprime_over_q(f: IntPoly, g: IntPoly) -> bool:
    return rat_gcd(f, g).degree == 0


def integer_roots(f: IntPoly) -> set[int]:
    """All integer zeros of a nonzero polynomial."""
    if f.is_zero():
        raise ValueError("the zero polynomial vanishes everywhere")
    m = next(i for i, c in enumerate(f.coeffs) if c)
    roots = {0} if m else set()
    low = abs(f.coeffs[m])
    if len(f.coeffs) - m == 1:
        return roots
    for d in arith.divisors(arith.factorize(low)):
        for cand in (d, -d):
            if poly_eval(f, cand) == 0:
                roots.add(cand)
    return roots


def _int_root(n: int, r: int) -> int | None:
    """Exact integer r-th root of n, or None."""
    if n < 0:
        if r % 2 == 0:
            return None
        root = _int_root(-n, r)
        return None if root is None else -root
    lo, hi = 0, 1
    while hi**r < n:
        hi *= 2
    while lo < hi:
        mid = (lo + hi) // 2
        if mid**r < n:
            lo = mid + 1
        else:
            hi = mid
    return lo if lo**r == n else None


def _try_root(f: IntPoly, r: int) -> IntPoly | None:
    d = f.degree // r
    top = _int_root(f.lc, r)
    if top is None:
        return None
    g = [0] * (d + 1)
    g[d] = top
    scale = r * top ** (r - 1)
    # coefficient of x^(r*d - j) in g^r is scale*g[d-j] plus terms in g[d-j+1..d]
    for j in range(1, d + 1):
        partial = IntPoly(g) ** r
        target = f.coeffs[r * d - j]
        have = partial.coeffs[r * d - j] if r * d - j < len(partial.coeffs) else 0
        num = target - have
        if num % scale:
            return None
        g[d - j] = num // scale
    base = IntPoly(g)
    return base if base**r == f else None


def perfect_power_decompose(f: IntPoly) -> tuple[IntPoly, int]:
    """Return ``(g, r)`` with ``f == g**r`` and ``r`` maximal."""
    if f.is_constant():
        raise ValueError("perfect-power decomposition needs a nonconstant polynomial")
    deg = f.degree
    for r in sorted((r for r in range(2, deg + 1) if deg % r == 0), reverse=True):
        g = _try_root(f, r)
        if g is not None:
            return g, r
    return f, 1
