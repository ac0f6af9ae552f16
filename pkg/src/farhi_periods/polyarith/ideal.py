"""Resultants and integer constants in the ideal (f, g) of Z[x].

The constant generator of ``(f, g) ∩ Z`` is read off a Hermite normal form of
the coefficient lattice spanned by ``x^j f`` and ``x^j g`` in degree <= N.
"""

from __future__ import annotations

from dataclasses import dataclass

from .poly import IntPoly, coprime_over_q


class CertificateError(RuntimeError):
    """A Bezout certificate failed exact verification (internal bug)."""


class NotCoprime(ValueError):
    pass


@dataclass(frozen=True)
class BezoutCertificate:
    """``a*f + b*g == c`` with ``c > 0``."""

    a: IntPoly
    b: IntPoly
    c: int

    def verify(self, f: IntPoly, g: IntPoly) -> bool:
        return self.c > 0 and self.a * f + self.b * g == IntPoly([self.c])


def sylvester_matrix(f: IntPoly, g: IntPoly) -> list[list[int]]:
    m, n = len(f.coeffs) - 1, len(g.coeffs) - 1
    size = m + n
    fd, gd = f.coeffs[::-1], g.coeffs[::-1]
    rows = []
    for i in range(n):
        rows.append([0] * i + list(fd) + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + list(gd) + [0] * (size - n - 1 - i))
    return rows


def bareiss_det(matrix: list[list[int]]) -> int:
    """Fraction-free determinant of a square integer matrix."""
    a = [row[:] for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def resultant(f: IntPoly, g: IntPoly) -> int:
    """Sylvester resultant; zero iff f and g share a factor over Q."""
    if f.is_zero() or g.is_zero():
        raise ValueError("resultant with the zero polynomial")
    return bareiss_det(sylvester_matrix(f, g))


def hermite_form(rows: list[list[int]]) -> tuple[list[list[int]], list[list[int]]]:
    """Row Hermite normal form ``H`` with unimodular ``U`` such that ``U·rows == H``.

    Pivots are positive and entries above a pivot are reduced into
    ``[0, pivot)``.  Zero rows end up at the bottom.
    """
    h = [row[:] for row in rows]
    m = len(h)
    ncols = len(h[0]) if h else 0
    u = [[int(i == j) for j in range(m)] for i in range(m)]

    def axpy(dst: int, src: int, q: int):
        # row[dst] -= q * row[src], in both H and U
        hs, hd = h[src], h[dst]
        for j in range(ncols):
            hd[j] -= q * hs[j]
        us, ud = u[src], u[dst]
        for j in range(m):
            ud[j] -= q * us[j]

    r = 0
    for col in range(ncols):
        if r == m:
            break
        while True:
            live = [i for i in range(r, m) if h[i][col]]
            if not live:
                break
            piv = min(live, key=lambda i: abs(h[i][col]))
            h[r], h[piv] = h[piv], h[r]
            u[r], u[piv] = u[piv], u[r]
            clean = True
            for i in range(r + 1, m):
                if h[i][col]:
                    axpy(i, r, h[i][col] // h[r][col])
                    clean = clean and h[i][col] == 0
            if clean:
                break
        if not h[r][col]:
            continue
        if h[r][col] < 0:
            h[r] = [-v for v in h[r]]
            u[r] = [-v for v in u[r]]
        for i in range(r):
            q = h[i][col] // h[r][col]
            if q:
                axpy(i, r, q)
        r += 1
    return h, u


def _exact_quotient(num: IntPoly, den: IntPoly) -> IntPoly:
    # den must have a unit leading coefficient
    rem = list(num.coeffs)
    dd = len(den.coeffs) - 1
    q = [0] * max(len(rem) - dd, 0)
    for i in range(len(rem) - 1, dd - 1, -1):
        c = rem[i] * den.lc  # lc is +-1 so this equals rem[i] / lc
        if c:
            q[i - dd] = c
            for j, dc in enumerate(den.coeffs):
                rem[i - dd + j] -= c * dc
    return IntPoly(q)


def _shrink(cert: BezoutCertificate, f: IntPoly, g: IntPoly) -> BezoutCertificate:
    """Reduce cofactor degrees when a leading coefficient is a unit."""
    a, b = cert.a, cert.b
    if abs(g.lc) == 1 and a.degree >= g.degree:
        q = _exact_quotient(a, g)
        a, b = a - q * g, b + q * f
    elif abs(f.lc) == 1 and b.degree >= f.degree:
        q = _exact_quotient(b, f)
        b, a = b - q * f, a + q * g
    return BezoutCertificate(a, b, cert.c)


def _lattice_constant(f: IntPoly, g: IntPoly, bound: int) -> BezoutCertificate | None:
    df, dg = len(f.coeffs) - 1, len(g.coeffs) - 1
    gens: list[tuple[str, int, IntPoly]] = []
    gens += [("a", j, f.shift_up(j)) for j in range(bound - df + 1)]
    gens += [("b", j, g.shift_up(j)) for j in range(bound - dg + 1)]
    # columns run from degree `bound` down to 0, so constants land last
    rows = [[p.coeffs[d] if d < len(p.coeffs) else 0 for d in range(bound, -1, -1)] for _, _, p in gens]
    h, u = hermite_form(rows)
    for i, row in enumerate(h):
        if row[-1] and not any(row[:-1]):
            a = [0] * (bound + 1)
            b = [0] * (bound + 1)
            for (side, j, _), coeff in zip(gens, u[i]):
                (a if side == "a" else b)[j] += coeff
            return BezoutCertificate(IntPoly(a), IntPoly(b), row[-1])
    return None


def _int_xgcd(x: int, y: int) -> tuple[int, int, int]:
    s0, s1, r0, r1 = 1, 0, x, y
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    t0 = (r0 - s0 * x) // y if y else 0
    if r0 < 0:
        r0, s0, t0 = -r0, -s0, -t0
    return s0, t0, r0


def ideal_int_generator(f: IntPoly, g: IntPoly) -> BezoutCertificate:
    """Positive generator of ``(f, g) ∩ Z`` with a verified certificate.

    The degree bound N starts at ``deg f + deg g - 1`` (the Sylvester size)
    and grows until the constant has not changed for ``deg f + deg g``
    consecutive steps.  Membership is always certified; minimality depends
    on that stabilization heuristic.
    """
    if f.is_zero() or g.is_zero():
        raise NotCoprime("the zero polynomial is not coprime to anything")
    if not coprime_over_q(f, g):
        raise NotCoprime(f"{f} and {g} share a factor over Q")
    df, dg = len(f.coeffs) - 1, len(g.coeffs) - 1
    if df == 0 and dg == 0:
        s, t, c = _int_xgcd(f.lc, g.lc)
        cert = BezoutCertificate(IntPoly([s]), IntPoly([t]), c)
    else:
        bound = max(df + dg - 1, df, dg)
        patience = df + dg
        cert = _lattice_constant(f, g, bound)
        if cert is None:
            raise CertificateError(f"no constant in the Sylvester lattice of {f}, {g}")
        stable = 0
        while stable < patience:
            bound += 1
            nxt = _lattice_constant(f, g, bound)
            if nxt is None or nxt.c == cert.c:
                stable += 1
            else:
                cert, stable = nxt, 0
        cert = _shrink(cert, f, g)
    if not cert.verify(f, g):
        raise CertificateError(f"certificate failed for {f}, {g}: {cert}")
    return cert
