"""Farhi arithmetic functions and their least periods.

For ``f`` in Z[x] and ``k >= 0``::

    g(n) = |f(n) f(n+1) ... f(n+k)| / lcm(f(n), ..., f(n+k))

is periodic whenever ``f(x)`` is coprime to every shift ``f(x+i)``,
``1 <= i <= k``, over Q.  The least period is assembled prime by prime from
the least periods of ``h_p(n) = v_p(g(n))``, each a power of ``p`` dividing
``p^e_p``.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from functools import cached_property

from . import arith
from .arith import Factorization
from .polyarith import (
    BezoutCertificate,
    IntPoly,
    coprime_over_q,
    ideal_int_generator,
    integer_roots,
    poly_eval,
    poly_format,
    poly_parse,
    poly_shift,
)

DEFAULT_ORACLE_BUDGET = 10**6


class HypothesisViolation(ValueError):
    """f(x) and some shift f(x+i) share a nontrivial factor over Q."""


class ZeroPolynomial(ValueError):
    pass


class ZeroWindow(ValueError):
    """The window [n, n+k] contains a zero of f."""


class BudgetExceeded(RuntimeError):
    pass


class PeriodCheckError(AssertionError):
    """A proven period failed to verify; indicates a bug, never bad input."""


@dataclass(frozen=True)
class FarhiInstance:
    f: IntPoly
    k: int
    constants: tuple[BezoutCertificate, ...]
    C: int
    C_factored: Factorization
    zero_set: frozenset[int]

    @cached_property
    def text(self) -> str:
        return poly_format(self.f)

    def window(self, n: int) -> list[int]:
        return [poly_eval(self.f, n + i) for i in range(self.k + 1)]


def new_instance(f: IntPoly | str, k: int) -> FarhiInstance:
    """Validate ``(f, k)`` and compute the ideal constants ``C_i``."""
    if isinstance(f, str):
        f = poly_parse(f)
    if k < 0:
        raise ValueError("k must be nonnegative")
    if f.is_zero():
        raise ZeroPolynomial("f is the zero polynomial")
    certs = []
    for i in range(1, k + 1):
        shifted = poly_shift(f, i)
        if not coprime_over_q(f, shifted):
            raise HypothesisViolation(f"{poly_format(f)} and its shift by {i} share a factor over Q")
        certs.append(ideal_int_generator(f, shifted))
    C = math.lcm(*(c.c for c in certs)) if certs else 1
    roots = integer_roots(f)
    zero_set = frozenset(r - i for r in roots for i in range(k + 1))
    return FarhiInstance(f, k, tuple(certs), C, arith.factorize(C), zero_set)


def _clear(inst: FarhiInstance, n: int, span: int | None = None) -> int:
    """Smallest ``n + a*C`` (a >= 0) such that ``[n, n + span]`` avoids the zero set.

    ``span`` defaults to ``k``, the window of ``g(n)``.
    """
    if not inst.zero_set:
        return n
    span = inst.k if span is None else span
    while any(n + i in inst.zero_set for i in range(span + 1)):
        n += inst.C
    return n


def g_eval(inst: FarhiInstance, n: int) -> int:
    vals = inst.window(n)
    if 0 in vals:
        raise ZeroWindow(f"f vanishes in the window starting at {n}")
    return abs(math.prod(vals)) // math.lcm(*vals)


def g_eval_ext(inst: FarhiInstance, n: int) -> int:
    """``g`` extended to the zero set by shifting along multiples of ``C``."""
    return g_eval(inst, _clear(inst, n))


def d_i(inst: FarhiInstance, i: int, n: int) -> int:
    if not 1 <= i <= inst.k:
        raise ValueError(f"i must lie in [1, {inst.k}]")
    a, b = poly_eval(inst.f, n), poly_eval(inst.f, n + i)
    assert a or b, "f(n) and f(n+i) both vanish, impossible for coprime f"
    return math.gcd(a, b)


class _PadicView:
    """Cached ``v_p(f(m))`` along zero-free windows of one instance."""

    def __init__(self, inst: FarhiInstance, p: int):
        self.inst = inst
        self.p = p
        self._cache: dict[int, int] = {}

    def v(self, m: int) -> int:
        try:
            return self._cache[m]
        except KeyError:
            val = arith.valuation(poly_eval(self.inst.f, m), self.p)
            self._cache[m] = val
            return val

    def window(self, n: int) -> list[int]:
        n = _clear(self.inst, n)
        return [self.v(n + i) for i in range(self.inst.k + 1)]

    def h(self, n: int) -> int:
        w = self.window(n)
        return sum(w) - max(w)

    def h_counting(self, n: int) -> int:
        w = self.window(n)
        total, t = 0, 1
        # the sum over t is infinite; stop at the first level nothing reaches
        while True:
            count = sum(1 for v in w if v >= t)
            total += max(0, count - 1)
            if count == 0:
                return total
            t += 1


def _prime(p: int) -> None:
    if not arith.is_prime(p):
        raise ValueError(f"{p} is not prime")


def h_eval(inst: FarhiInstance, p: int, n: int) -> int:
    """``v_p(g(n))`` as a sum of valuations minus their maximum."""
    _prime(p)
    return _PadicView(inst, p).h(n)


def h_eval_counting(inst: FarhiInstance, p: int, n: int) -> int:
    """``v_p(g(n))`` as ``sum_t max(0, #{m : p^t | f(m)} - 1)`` over the window."""
    _prime(p)
    return _PadicView(inst, p).h_counting(n)


def _e_p(inst: FarhiInstance, view: _PadicView) -> int:
    p = view.p
    e_c = inst.C_factored.exponent(p)
    if e_c == 0 or inst.k == 0:
        return 0
    best = 0
    for n in range(1, p**e_c + 1):
        w = view.window(n)
        best = max(best, max(min(w[0], w[i]) for i in range(1, inst.k + 1)))
        if best == e_c:
            break
    return best


def e_p_compute(inst: FarhiInstance, p: int) -> int:
    """Largest ``v_p(gcd(f(n), f(n+i)))`` over ``1 <= n <= p^v_p(C)``, ``1 <= i <= k``."""
    _prime(p)
    return _e_p(inst, _PadicView(inst, p))


@dataclass(frozen=True)
class PrimeLocalReport:
    p: int
    e_p: int
    T_p: int
    # n with h(n) != h(n + T_p/p), proving T_p/p is not a period
    counterexample: int | None = field(default=None, compare=False)

    @property
    def t(self) -> int:
        return arith.valuation(self.T_p, self.p)


def _local(inst: FarhiInstance, p: int, view: _PadicView | None = None) -> PrimeLocalReport:
    view = view or _PadicView(inst, p)
    e = _e_p(inst, view)
    if e == 0:
        return PrimeLocalReport(p, 0, 1)
    top = p**e
    hs = [0] + [view.h(n) for n in range(1, 2 * top + 1)]
    if any(hs[n] != hs[n + top] for n in range(1, top + 1)):
        raise PeriodCheckError(f"{p}^{e} is not a period of h_{p} for {inst.text}, k={inst.k}")
    t, witness = e, None
    while t > 0:
        step = p ** (t - 1)
        witness = next((n for n in range(1, top + 1) if hs[n] != hs[n + step]), None)
        if witness is not None:
            break
        t -= 1
    return PrimeLocalReport(p, e, p**t, witness)


def prime_least_period(inst: FarhiInstance, p: int) -> PrimeLocalReport:
    """Least period of ``h_p``, found by descending from ``p^e_p``."""
    _prime(p)
    return _local(inst, p)


def criterion_trivial_period(inst: FarhiInstance, p: int) -> bool:
    """Closed test for ``T_p == 1`` by comparing each window with its successor."""
    _prime(p)
    view = _PadicView(inst, p)
    e = _e_p(inst, view)
    k = inst.k
    for n in range(1, p**e + 1):
        # both windows must be read at the same shift
        base = _clear(inst, n, k + 1)
        first, last = view.v(base), view.v(base + k + 1)
        inner = max((view.v(base + i) for i in range(1, k + 1)), default=0)
        if min(first, last) >= inner:
            continue
        if first == last < inner:
            continue
        return False
    return True


def criterion_max_period(inst: FarhiInstance, p: int) -> bool:
    """Closed test for ``T_p == p^e_p``: some window's count of multiples of ``p^e_p`` moves under a ``p^(e_p-1)`` shift."""
    _prime(p)
    view = _PadicView(inst, p)
    e = _e_p(inst, view)
    if e == 0:
        raise ValueError(f"e_p = 0 for p = {p}; the criterion is undefined")
    step = p ** (e - 1)
    for n0 in range(1, p**e + 1):
        here = sum(1 for v in view.window(n0) if v >= e)
        there = sum(1 for v in view.window(n0 + step) if v >= e)
        if here != there:
            return True
    return False


@dataclass(frozen=True)
class PeriodReport:
    f: str
    k: int
    C: int
    locals: tuple[PrimeLocalReport, ...]
    T: int

    @property
    def T_factored(self) -> Factorization:
        return Factorization.from_dict({r.p: r.t for r in self.locals if r.T_p > 1})

    def to_json(self) -> dict:
        return {
            "f": self.f,
            "k": self.k,
            "C": str(self.C),
            "locals": [{"p": str(r.p), "e_p": r.e_p, "T_p": str(r.T_p)} for r in self.locals],
            "T": str(self.T),
            "T_factored": [[p, e] for p, e in self.T_factored],
        }

    @classmethod
    def from_json(cls, data: dict) -> PeriodReport:
        locals_ = tuple(PrimeLocalReport(int(r["p"]), int(r["e_p"]), int(r["T_p"])) for r in data["locals"])
        return cls(data["f"], int(data["k"]), int(data["C"]), locals_, int(data["T"]))


def least_period(inst: FarhiInstance) -> PeriodReport:
    if inst.f.is_constant():
        return PeriodReport(inst.text, inst.k, inst.C, (), 1)
    reports = []
    for p in inst.C_factored.primes():
        rep = _local(inst, p)
        if rep.T_p > 1 or rep.e_p > 0:
            reports.append(rep)
    T = math.prod(r.T_p for r in reports)
    if inst.C % T:
        raise PeriodCheckError(f"least period {T} does not divide C = {inst.C}")
    return PeriodReport(inst.text, inst.k, inst.C, tuple(reports), T)


def oracle_budget() -> int:
    raw = os.environ.get("FARHI_ORACLE_BUDGET")
    return int(raw) if raw else DEFAULT_ORACLE_BUDGET


def oracle_least_period(inst: FarhiInstance, budget: int | None = None) -> int:
    """Brute force: least divisor ``d`` of ``C`` with ``g(n) == g(n+d)`` on ``[1, C]``."""
    budget = oracle_budget() if budget is None else budget
    C = inst.C
    if C > budget:
        raise BudgetExceeded(f"C = {C} exceeds the oracle budget {budget}")
    seq = [g_eval_ext(inst, n) for n in range(1, 2 * C + 1)]
    for d in arith.divisors(inst.C_factored):
        if all(seq[n] == seq[n + d] for n in range(C)):
            return d
    raise PeriodCheckError(f"C = {C} is not a period of g for {inst.text}, k={inst.k}")
