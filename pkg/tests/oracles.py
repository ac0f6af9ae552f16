"""Brute-force references that share no code with the package."""

from __future__ import annotations

import math

import sympy

X = sympy.Symbol("x")


def as_expr(coeffs):
    return sum(c * X**i for i, c in enumerate(coeffs))


def sylvester_resultant(coeffs_f, coeffs_g):
    """det of the Sylvester matrix; sympy.resultant can disagree in sign for some degree pairs."""
    a, b = list(reversed(coeffs_f)), list(reversed(coeffs_g))
    m, n = len(a) - 1, len(b) - 1
    size = m + n
    rows = [[0] * i + a + [0] * (size - m - 1 - i) for i in range(n)]
    rows += [[0] * i + b + [0] * (size - n - 1 - i) for i in range(m)]
    return int(sympy.Matrix(rows).det()) if size else 1


def values(coeffs):
    def f(n):
        return sum(c * n**i for i, c in enumerate(coeffs))

    return f


def g_direct(coeffs, k, n):
    f = values(coeffs)
    w = [f(n + i) for i in range(k + 1)]
    return abs(math.prod(w)) // math.lcm(*w)


def resultant_bound(coeffs, k):
    """lcm of |Res(f(x), f(x+i))|, a period of g by ideal membership."""
    e = as_expr(coeffs)
    out = 1
    for i in range(1, k + 1):
        out = math.lcm(out, abs(int(sympy.resultant(e, e.subs(X, X + i), X))))
    return out


def first_clear(coeffs, k):
    roots = [int(r) for r in sympy.Poly(as_expr(coeffs), X).ground_roots() if r.is_integer]
    return max(roots) + 1 if roots else 1


def brute_least_period(coeffs, k):
    """Least period of g on a half-line beyond every zero, searched over divisors of the resultant bound."""
    R = resultant_bound(coeffs, k)
    n0 = first_clear(coeffs, k)
    seq = [g_direct(coeffs, k, n) for n in range(n0, n0 + 2 * R)]
    for d in sympy.divisors(R):
        if all(seq[j] == seq[j + d] for j in range(R)):
            return d
    raise AssertionError("resultant bound is not a period")


def constant_lower_bound(coeffs_f, coeffs_g, modulus):
    """A divisor of every integer in the ideal (f, g).

    Every such integer is a multiple of gcd(f(n), g(n)) for all n, and of any
    prime p for which f, g keep a common factor mod p.
    """
    f, g = values(coeffs_f), values(coeffs_g)
    bound = 1
    for n in range(modulus):
        bound = math.lcm(bound, math.gcd(f(n), g(n)))
    for p in sympy.primefactors(modulus):
        if bound % p == 0:
            continue
        pf = sympy.Poly(as_expr(coeffs_f), X, modulus=p)
        pg = sympy.Poly(as_expr(coeffs_g), X, modulus=p)
        if pf.is_zero and pg.is_zero or sympy.gcd(pf, pg).degree() >= 1:
            bound = math.lcm(bound, p)
    return bound


def ideal_constant_monic(coeffs_f, coeffs_g):
    """Positive generator of (f, g) ∩ Z for monic f, via the multiplication-by-g lattice in Z[x]/(f)."""
    fe, ge = sympy.Poly(as_expr(coeffs_f), X), sympy.Poly(as_expr(coeffs_g), X)
    assert fe.LC() == 1
    d = fe.degree()
    rows = []
    for j in range(d):
        r = (ge * sympy.Poly(X**j, X)).rem(fe)
        c = r.all_coeffs()[::-1]
        rows.append([int(v) for v in c] + [0] * (d - len(c)))
    M = sympy.Matrix(rows)
    e0 = sympy.Matrix([1] + [0] * (d - 1))
    y = M.T.solve(e0)
    return math.lcm(*[int(sympy.Rational(v).q) for v in y])
