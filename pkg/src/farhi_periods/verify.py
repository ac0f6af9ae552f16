"""Self-verification suites behind ``farhi verify``.

Every check is deterministic (fixed seeds) and independent of pytest so an
installed build can audit itself.
"""

from __future__ import annotations

import math
import os
import random
from dataclasses import dataclass
from typing import Callable

from . import arith, closedforms, farhi, published
from .polyarith import (
    IntPoly,
    ideal_int_generator,
    perfect_power_decompose,
    poly_eval,
    poly_format,
    poly_parse,
    poly_shift,
    rat_gcd,
    resultant,
)

SUITE_CAPS = {"small": 10**4, "full": 10**6}

# (polynomial, k) pairs spanning degrees 1-3; filtered by C at run time
CANDIDATES: list[tuple[str, int]] = (
    [("x", k) for k in range(0, 9)]
    + [("2*x + 1", k) for k in (1, 2, 3)]
    + [("3*x - 2", k) for k in (2, 3, 4)]
    + [("5*x + 3", 3), ("x - 4", 3), ("4*x - 1", 4)]
    + [(f"x^2 + {b}", k) for b in range(1, 7) for k in (1, 2, 3)]
    + [("x^2 - 2", 2), ("x^2 + x + 1", 2), ("x^2 - 3*x + 1", 2), ("2*x^2 + 1", 1), ("x^2", 3)]
    + [("x^2 + 2*x + 1", 4), ("x^2 - 5", 3), ("3*x^2 - 1", 1)]
    + [("x^3 + 1", 1), ("x^3 + 2", 1), ("x^3 + 3", 1), ("x^3 + 4", 1), ("x^3 - x + 1", 1)]
    + [("x^3 + 1", 2), ("x^3 + x + 1", 1), ("x^3", 2), ("x^3 - 2", 1)]
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def standard_instances(cap: int) -> list[farhi.FarhiInstance]:
    out = []
    for text, k in CANDIDATES:
        inst = farhi.new_instance(text, k)
        if inst.C <= cap:
            out.append(inst)
    return out


def random_poly(rng: random.Random, max_deg: int = 4, bound: int = 9) -> IntPoly:
    deg = rng.randint(0, max_deg)
    cs = [rng.randint(-bound, bound) for _ in range(deg)] + [rng.choice([-1, 1]) * rng.randint(1, bound)]
    return IntPoly(cs)


# -- polynomial layer -------------------------------------------------------


def check_shift(rng: random.Random, cap: int) -> str:
    for _ in range(50):
        f, i = random_poly(rng), rng.randint(-20, 20)
        s = poly_shift(f, i)
        for n in (rng.randint(-10**6, 10**6) for _ in range(100)):
            assert poly_eval(s, n) == poly_eval(f, n + i), (f, i, n)
    return "50 polynomials x 100 points"


def check_resultant_gcd(rng: random.Random, cap: int) -> str:
    shared = 0
    for _ in range(200):
        f, g = random_poly(rng, 3, 4), random_poly(rng, 3, 4)
        if rng.random() < 0.3:
            h = random_poly(rng, 1, 4)
            if not h.is_constant():
                f, g = f * h, g * h
        zero = resultant(f, g) == 0
        shared += zero
        assert zero == (rat_gcd(f, g).degree >= 1), (f, g)
    return f"200 pairs, {shared} with a common factor"


def check_certificates(rng: random.Random, cap: int) -> str:
    done = 0
    while done < 40:
        f, g = random_poly(rng, 3, 5), random_poly(rng, 3, 5)
        if f.is_constant() and g.is_constant() or rat_gcd(f, g).degree >= 1:
            continue
        cert = ideal_int_generator(f, g)
        assert cert.a * f + cert.b * g - IntPoly([cert.c]) == IntPoly(), (f, g)
        res = resultant(f, g)
        assert res % cert.c == 0, (f, g, cert.c, res)
        done += 1
    return "40 coprime pairs; certificates exact, c | resultant"


def check_parse_roundtrip(rng: random.Random, cap: int) -> str:
    for _ in range(1000):
        f = random_poly(rng, 6, 50) if rng.random() < 0.95 else IntPoly()
        assert poly_parse(poly_format(f)) == f, f
    return "1000 polynomials"


def check_perfect_powers(rng: random.Random, cap: int) -> str:
    for _ in range(30):
        base = random_poly(rng, 2, 6)
        if base.is_constant():
            continue
        r = rng.randint(1, 4)
        g, s = perfect_power_decompose(base**r)
        assert g**s == base**r and s % r == 0, (base, r, g, s)
    return "30 powers"


# -- integers ---------------------------------------------------------------


def check_factorize(rng: random.Random, cap: int) -> str:
    for _ in range(300):
        n = rng.randint(1, 10**12)
        fac = arith.factorize(n)
        assert fac.value == n, n
        assert len(arith.divisors(fac)) == math.prod(e + 1 for _, e in fac), n
    return "300 values up to 1e12"


def check_valuations(rng: random.Random, cap: int) -> str:
    for _ in range(300):
        a, b = rng.randint(1, 10**9) * rng.choice([-1, 1]), rng.randint(1, 10**9)
        p = rng.choice([2, 3, 5, 7, 11])
        assert arith.v_p(a * b, p) == arith.v_p(a, p) + arith.v_p(b, p)
        assert math.gcd(a, b) * math.lcm(a, b) == abs(a * b)
    return "300 pairs"


# -- Farhi functions --------------------------------------------------------


def check_oracle(rng: random.Random, cap: int) -> str:
    insts = standard_instances(cap)
    # an explicit FARHI_ORACLE_BUDGET replaces the suite cap
    budget = farhi.oracle_budget() if os.environ.get("FARHI_ORACLE_BUDGET") else cap
    for inst in insts:
        T = farhi.least_period(inst).T
        assert T == farhi.oracle_least_period(inst, budget=budget), (inst.text, inst.k)
        assert inst.C % T == 0
    return f"{len(insts)} instances with C <= {cap}"


def check_counting_identity(rng: random.Random, cap: int) -> str:
    points = 0
    for inst in standard_instances(cap):
        for p in inst.C_factored.primes():
            e = farhi.e_p_compute(inst, p)
            ns = list(range(1, p**e + 1)) + [rng.randint(-10**4, 10**4) for _ in range(100)]
            for n in ns:
                assert farhi.h_eval(inst, p, n) == farhi.h_eval_counting(inst, p, n), (inst.text, inst.k, p, n)
            points += len(ns)
    return f"{points} points"


def check_criteria(rng: random.Random, cap: int) -> str:
    pairs = 0
    for inst in standard_instances(cap):
        for p in inst.C_factored.primes():
            rep = farhi.prime_least_period(inst, p)
            assert farhi.criterion_trivial_period(inst, p) == (rep.T_p == 1), (inst.text, inst.k, p)
            if rep.e_p >= 1:
                assert farhi.criterion_max_period(inst, p) == (rep.T_p == p**rep.e_p), (inst.text, inst.k, p)
            pairs += 1
    return f"{pairs} (instance, prime) pairs"


def check_extension(rng: random.Random, cap: int) -> str:
    for inst in standard_instances(cap):
        T = farhi.least_period(inst).T
        ns = sorted(inst.zero_set) + [rng.randint(-10**5, 10**5) for _ in range(100)]
        for n in ns:
            assert farhi.g_eval_ext(inst, n) == farhi.g_eval_ext(inst, n + T), (inst.text, inst.k, n)
        for i, cert in enumerate(inst.constants, start=1):
            for n in (rng.randint(-10**5, 10**5) for _ in range(40)):
                assert farhi.d_i(inst, i, n) == farhi.d_i(inst, i, n + cert.c)
    return "extended g periodic in T; d_i periodic in C_i"


def check_pairwise_gcds(rng: random.Random, cap: int) -> str:
    # The shift must preserve every d_i, so use C; the least period of g
    # generally does not (f = x, k = 3: T = 3 moves gcd(n, n+2)).
    for inst in standard_instances(cap):
        k, shift = inst.k, inst.C
        for _ in range(30):
            n = rng.randint(-10**4, 10**4)
            a, b = inst.window(n), inst.window(n + shift)
            if 0 in a or 0 in b:
                continue
            for i in range(k + 1):
                for j in range(i + 1, k + 1):
                    assert math.gcd(a[i], a[j]) == math.gcd(b[i], b[j]), (inst.text, k, n, i, j)
            assert farhi.g_eval(inst, n) == farhi.g_eval(inst, n + shift)
    return "pairwise window gcds agree across C"


def check_nondivisors(rng: random.Random, cap: int) -> str:
    for inst in standard_instances(cap):
        q = next(p for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43) if inst.C % p)
        for n in (rng.randint(-10**4, 10**4) for _ in range(100)):
            assert farhi.h_eval(inst, q, n) == 0
        for n in range(1, 30):
            if n not in inst.zero_set:
                g = farhi.g_eval(inst, n)
                assert g >= 1 and math.prod(abs(v) for v in inst.window(n)) % g == 0
    return "h_p = 0 off C; g divides the window product"


def check_perfect_power_periods(rng: random.Random, cap: int) -> str:
    bases = ["x", "x + 1", "x^2 + 1", "2*x + 1", "x^2 + 2"]
    for text in bases:
        base = poly_parse(text)
        for r in (2, 3):
            for k in (1, 2):
                bi, fi = farhi.new_instance(base, k), farhi.new_instance(base**r, k)
                assert closedforms.reduce_perfect_power(base**r, k) == (base, r)
                assert farhi.least_period(fi).T == farhi.least_period(bi).T, (text, r, k)
                for n in range(1, 40):
                    assert farhi.g_eval_ext(fi, n) == farhi.g_eval_ext(bi, n) ** r
    return "5 bases, r in {2, 3}"


# -- closed forms -----------------------------------------------------------


def check_farhi_kane(rng: random.Random, cap: int) -> str:
    for k in range(0, 9):
        inst = farhi.new_instance("x", k)
        T = closedforms.farhi_kane_T(k).value
        assert T == farhi.least_period(inst).T == farhi.oracle_least_period(inst, budget=cap), k
    return "k = 0..8"


def linear_cases():
    for k in range(1, 5):
        for a in range(1, 6):
            for b in range(-5, 6):
                if math.gcd(a, b) == 1:
                    yield k, a, b


def check_linear(rng: random.Random, cap: int) -> str:
    n = 0
    for k, a, b in linear_cases():
        inst = farhi.new_instance(IntPoly([b, a]), k)
        assert closedforms.linear_T(k, a, b).value == farhi.least_period(inst).T, (k, a, b)
        n += 1
    return f"{n} linear cases"


def spaced_least_period(k: int, a: int) -> tuple[int, bool]:
    """Least period of the spaced product over a window of ``2*a*lcm(1..k)``."""
    window = 2 * a * arith.lcm_range(k)
    target = closedforms.spaced_T(k, a).value
    seq = [closedforms.g_spaced_eval(k, a, n) for n in range(1, window + target + 1)]
    holds = lambda d: all(seq[i] == seq[i + d] for i in range(window))  # noqa: E731
    least = next(d for d in arith.divisors(arith.factorize(target)) if holds(d))
    return least, holds(target)


def check_spaced(rng: random.Random, cap: int) -> str:
    for k in range(1, 5):
        for a in range(1, 5):
            least, ok = spaced_least_period(k, a)
            assert ok and least == closedforms.spaced_T(k, a).value, (k, a, least)
    for _ in range(200):
        k, a = rng.randint(1, 4), rng.randint(1, 5)
        b = rng.choice([b for b in range(-5, 6) if math.gcd(a, b) == 1])
        n = rng.randint(1, 500)
        if a * n + b < 1:
            continue
        inst = farhi.new_instance(IntPoly([b, a]), k)
        assert farhi.g_eval(inst, n) == closedforms.g_spaced_eval(k, a, a * n + b)
    return "k <= 4, a <= 4; bridge identity on 200 draws"


def check_recursion(rng: random.Random, cap: int) -> str:
    for k in range(1, 7):
        inst = farhi.new_instance("x", k)
        for n in range(1, 101):
            assert closedforms.g_k_recursive(k, n) == farhi.g_eval(inst, n)
    return "k <= 6, n <= 100"


# -- published tables -------------------------------------------------------


def table_mismatches(template: str) -> list[tuple[int, int, int, int]]:
    """Cells ``(b, k, computed, published)`` where the grids disagree."""
    grid = published.TEMPLATES[template]
    bad = []
    for (b, k), exps in sorted(grid.items()):
        T = farhi.least_period(farhi.new_instance(template.format(b=b), k)).T
        if T != published.value(exps):
            bad.append((b, k, T, published.value(exps)))
    return bad


def _table_check(template: str) -> Callable[[random.Random, int], str]:
    def check(rng: random.Random, cap: int) -> str:
        bad = table_mismatches(template)
        assert not bad, f"{len(bad)}/36 cells differ, first (b, k, computed, published) = {bad[0]}"
        return "36/36 cells"

    return check


CHECKS: list[tuple[str, tuple[str, ...], Callable[[random.Random, int], str]]] = [
    ("shift-eval", ("small", "full"), check_shift),
    ("resultant-vs-gcd", ("small", "full"), check_resultant_gcd),
    ("bezout-certificates", ("small", "full"), check_certificates),
    ("parse-print-roundtrip", ("small", "full"), check_parse_roundtrip),
    ("perfect-power", ("small", "full"), check_perfect_powers),
    ("factorize", ("small", "full"), check_factorize),
    ("valuations", ("small", "full"), check_valuations),
    ("oracle-equivalence", ("small", "full"), check_oracle),
    ("counting-identity", ("small", "full"), check_counting_identity),
    ("criteria-consistency", ("small", "full"), check_criteria),
    ("extension-and-d_i", ("small", "full"), check_extension),
    ("pairwise-gcds", ("small", "full"), check_pairwise_gcds),
    ("nondivisor-primes", ("small", "full"), check_nondivisors),
    ("perfect-power-periods", ("small", "full"), check_perfect_power_periods),
    ("farhi-kane", ("small", "full"), check_farhi_kane),
    ("linear-closed-form", ("small", "full"), check_linear),
    ("spaced-product", ("small", "full"), check_spaced),
    ("factorial-recursion", ("small", "full"), check_recursion),
    ("published-quadratic-table", ("full",), _table_check("x^2+{b}")),
    ("published-cubic-table", ("full",), _table_check("x^3+{b}")),
]


def run_suite(suite: str, seed: int = 20090101) -> list[CheckResult]:
    if suite not in SUITE_CAPS:
        raise ValueError(f"unknown suite {suite!r}")
    cap = SUITE_CAPS[suite]
    results = []
    for name, suites, fn in CHECKS:
        if suite not in suites:
            continue
        try:
            detail = fn(random.Random(f"{seed}:{name}"), cap)
            results.append(CheckResult(name, True, detail))
        except AssertionError as exc:
            results.append(CheckResult(name, False, f"counterexample {exc}"))
    return results
