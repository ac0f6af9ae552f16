from fractions import Fraction

import pytest
import sympy
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from farhi_periods.polyarith import (
    NEG_INF,
    CertificateError,
    IntPoly,
    NotCoprime,
    PolySyntaxError,
    hermite_form,
    ideal_int_generator,
    integer_roots,
    perfect_power_decompose,
    poly_eval,
    poly_format,
    poly_parse,
    poly_shift,
    rat_gcd,
    resultant,
)

from oracles import X, as_expr, constant_lower_bound, ideal_constant_monic, sylvester_resultant

P = poly_parse


def polys(max_deg=4, bound=20):
    return st.lists(st.integers(-bound, bound), min_size=0, max_size=max_deg + 1).map(IntPoly)


def nonconstant(max_deg=3, bound=6):
    return polys(max_deg, bound).filter(lambda f: not f.is_constant())


# -- parsing and printing ---------------------------------------------------


@pytest.mark.parametrize(
    "text, coeffs",
    [
        ("x^2+1", [1, 0, 1]),
        ("2*x - x + 3", [3, 1]),
        ("0", []),
        ("-x^3 + 2x^2 - 7", [-7, 0, 2, -1]),
        (" + 4 x ^ 2 ", [0, 0, 4]),
        ("x + x + x^0", [1, 2]),
        ("x^2 - x^2", []),
    ],
)
def test_parse(text, coeffs):
    assert P(text).coeffs == tuple(coeffs)


@pytest.mark.parametrize("text, pos", [("y+1", 0), ("x+", 2), ("2*z", 2), ("x^", 2), ("x^2 1", 4), ("", 0), ("3x y", 3)])
def test_parse_errors_carry_position(text, pos):
    with pytest.raises(PolySyntaxError) as info:
        P(text)
    assert info.value.pos == pos


def test_format_canonical():
    assert poly_format(P("1 - 3*x + x^2")) == "x^2 - 3*x + 1"
    assert poly_format(P("-x^3 - 1")) == "-x^3 - 1"
    assert poly_format(P("-2*x")) == "-2*x"
    assert poly_format(IntPoly()) == "0"
    assert str(P("x")) == "x"


@settings(max_examples=1000)
@given(polys(6, 10**6))
def test_parse_print_roundtrip(f):
    text = poly_format(f)
    assert P(text) == f
    assert poly_format(P(text)) == text


# -- evaluation and shifts --------------------------------------------------


def test_eval_examples():
    assert poly_eval(P("x^2+1"), 2) == 5
    assert poly_eval(IntPoly(), 7) == 0
    assert poly_eval(P("x^3+2"), -1) == 1
    assert poly_eval(P("x^40"), 10) == 10**40


def test_shift_examples():
    assert poly_shift(P("x^2+1"), 1) == P("x^2+2*x+2")
    f = P("3*x^4 - x + 9")
    assert poly_shift(f, 0) == f
    assert poly_shift(P("x"), 4) == P("x+4")


@given(polys(5, 50), st.integers(-30, 30), st.lists(st.integers(-10**6, 10**6), min_size=1, max_size=100))
def test_shift_matches_eval(f, i, ns):
    s = poly_shift(f, i)
    for n in ns:
        assert poly_eval(s, n) == poly_eval(f, n + i)


def test_degree_marker():
    assert IntPoly().degree == NEG_INF
    assert IntPoly([0, 0]).is_zero()
    assert NEG_INF < 0
    assert P("x^3").degree == 3


# -- gcd and resultants -----------------------------------------------------


def test_rat_gcd_examples():
    assert rat_gcd(P("x^2+x"), P("x^2+3*x+2")).coeffs == (1, 1)
    assert rat_gcd(P("x^2+1"), P("x^2+2*x+2")).coeffs == (1,)
    f = P("2*x^2 + 4*x - 6")
    assert rat_gcd(f, f).coeffs == (Fraction(-3), Fraction(2), Fraction(1))
    with pytest.raises(ValueError):
        rat_gcd(IntPoly(), IntPoly())


def test_resultant_examples():
    assert resultant(P("x"), P("x+5")) == 5
    # roots of x^2+1 are ±i; (i^2+2i+2)(i^2-2i+2) = (1+2i)(1-2i) = 5
    assert resultant(P("x^2+1"), P("x^2+2*x+2")) == 5
    assert resultant(P("x^2+x"), P("x^2+3*x+2")) == 0
    assert resultant(P("3"), P("x^2+1")) == 9
    with pytest.raises(ValueError):
        resultant(IntPoly(), P("x"))


@settings(max_examples=200, deadline=None)
@given(nonconstant(), nonconstant())
def test_resultant_matches_sympy(f, g):
    assert resultant(f, g) == sylvester_resultant(f.coeffs, g.coeffs)
    assert abs(resultant(f, g)) == abs(int(sympy.resultant(as_expr(f.coeffs), as_expr(g.coeffs), X)))


@settings(max_examples=200, deadline=None)
@given(polys(3, 5).filter(lambda f: not f.is_zero()), polys(3, 5).filter(lambda f: not f.is_zero()), polys(1, 4))
def test_resultant_vanishes_iff_common_factor(f, g, h):
    if not h.is_constant():
        f, g = f * h, g * h
    assert (resultant(f, g) == 0) == (rat_gcd(f, g).degree >= 1)
    expected = sympy.Poly(sympy.gcd(as_expr(f.coeffs), as_expr(g.coeffs)), X).degree()
    assert rat_gcd(f, g).degree == expected


# -- Hermite form and ideal constants ---------------------------------------


def test_hermite_form_transform():
    rows = [[2, 4, 4], [-6, 6, 12], [10, -4, -16], [1, 1, 1]]
    h, u = hermite_form(rows)
    assert sympy.Matrix(u).det() in (1, -1)
    assert (sympy.Matrix(u) * sympy.Matrix(rows)).tolist() == h
    assert sympy.Matrix(h).T.tolist() and h[0][0] > 0
    # echelon: pivots strictly move right
    pivots = [next(j for j, v in enumerate(r) if v) for r in h if any(r)]
    assert pivots == sorted(set(pivots))


def test_ideal_generator_examples():
    cert = ideal_int_generator(P("x"), P("x+1"))
    assert cert.c == 1
    f = P("x^2+1")
    assert ideal_int_generator(f, poly_shift(f, 1)).c == 5
    # every element of (x, x+4) ∩ Z is divisible by gcd(f(0), g(0)) = 4, and (x+4) - x = 4
    assert constant_lower_bound([0, 1], [4, 1], 4) == 4
    assert ideal_int_generator(P("x"), P("x+4")).c == 4


def test_ideal_generator_constants():
    assert ideal_int_generator(IntPoly([6]), IntPoly([-10])).c == 2
    cert = ideal_int_generator(IntPoly([4]), P("2*x+1"))
    assert cert.c == 1 and cert.verify(IntPoly([4]), P("2*x+1"))


def test_ideal_generator_rejects_common_factor():
    with pytest.raises(NotCoprime):
        ideal_int_generator(P("x^2+x"), P("x^2+3*x+2"))
    with pytest.raises(NotCoprime):
        ideal_int_generator(IntPoly(), P("x"))


def test_certificate_is_checked(monkeypatch):
    from farhi_periods.polyarith import ideal

    def broken(f, g, bound):
        cert = ideal.BezoutCertificate(IntPoly([1]), IntPoly(), 7)
        return cert

    monkeypatch.setattr(ideal, "_lattice_constant", broken)
    monkeypatch.setattr(ideal, "_shrink", lambda cert, f, g: cert)
    with pytest.raises(CertificateError):
        ideal_int_generator(P("x"), P("x+7"))


@settings(max_examples=80, deadline=None)
@given(nonconstant(3, 5), nonconstant(3, 5))
def test_certificates_are_exact_and_divide_resultant(f, g):
    assume(rat_gcd(f, g).degree == 0)
    cert = ideal_int_generator(f, g)
    assert cert.a * f + cert.b * g - IntPoly([cert.c]) == IntPoly()
    assert resultant(f, g) % cert.c == 0
    # nothing smaller than the value-gcd / mod-p bound can lie in the ideal
    assert cert.c % constant_lower_bound(f.coeffs, g.coeffs, cert.c) == 0


def test_quadratic_constants_are_minimal():
    for b in range(1, 7):
        f = IntPoly([b, 0, 1])
        for i in range(1, 7):
            g = poly_shift(f, i)
            assert ideal_int_generator(f, g).c == ideal_constant_monic(f.coeffs, g.coeffs), (b, i)


@settings(max_examples=60, deadline=None)
@given(polys(2, 6), polys(3, 6).filter(lambda g: not g.is_zero()), st.integers(1, 3))
def test_monic_constants_match_lattice_oracle(low, g, d):
    f = IntPoly(list(low.coeffs[:d]) + [0] * (d - len(low.coeffs[:d])) + [1])
    assume(rat_gcd(f, g).degree == 0)
    assert ideal_int_generator(f, g).c == ideal_constant_monic(f.coeffs, g.coeffs)


# -- roots and powers -------------------------------------------------------


def test_integer_roots():
    assert integer_roots(P("x^2-1")) == {-1, 1}
    assert integer_roots(P("x^2+1")) == set()
    assert integer_roots(P("x^3")) == {0}
    assert integer_roots(P("2*x^3 - 3*x^2 - 11*x + 6")) == {-2, 3}
    assert integer_roots(P("7")) == set()
    with pytest.raises(ValueError):
        integer_roots(IntPoly())


@given(st.lists(st.integers(-30, 30), min_size=1, max_size=4), st.integers(1, 3))
def test_integer_roots_of_products(roots, lead):
    f = IntPoly([lead])
    for r in roots:
        f = f * IntPoly([-r, 1])
    f = f * P("x^2 + 1")
    assert integer_roots(f) == set(roots)


def test_perfect_power_examples():
    assert perfect_power_decompose(P("x^2+2*x+1")) == (P("x+1"), 2)
    assert perfect_power_decompose(P("x^2+1")) == (P("x^2+1"), 1)
    assert perfect_power_decompose(P("x^6")) == (P("x"), 6)
    assert perfect_power_decompose(P("-8*x^3 + 12*x^2 - 6*x + 1")) == (P("-2*x+1"), 3)
    assert perfect_power_decompose(P("4*x^2")) == (P("2*x"), 2)
    with pytest.raises(ValueError):
        perfect_power_decompose(IntPoly([3]))


def _max_power(f: IntPoly) -> int:
    # f = c * prod p_i^m_i is an r-th power iff r | every m_i and c is an r-th power
    content, factors = sympy.Poly(as_expr(f.coeffs), X).factor_list()
    content = int(content)
    best = 1
    for r in range(2, f.degree + 1):
        if any(m % r for _, m in factors):
            continue
        root, exact = sympy.integer_nthroot(abs(content), r)
        if exact and (content > 0 or r % 2):
            best = r
    return best


@settings(max_examples=100, deadline=None)
@given(nonconstant(2, 6), st.integers(1, 4))
def test_perfect_power_is_maximal(base, r):
    f = base**r
    g, s = perfect_power_decompose(f)
    assert g**s == f
    assert s == _max_power(f)
