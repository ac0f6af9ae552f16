"""Exact polynomial arithmetic over Z and Q."""

from .ideal import (
    BezoutCertificate,
    CertificateError,
    NotCoprime,
    bareiss_det,
    hermite_form,
    ideal_int_generator,
    resultant,
    sylvester_matrix,
)
from .poly import (
    NEG_INF,
    IntPoly,
    RatPoly,
    coprime_over_q,
    integer_roots,
    perfect_power_decompose,
    poly_eval,
    poly_shift,
    rat_gcd,
)
from .text import PolySyntaxError, poly_format, poly_parse

__all__ = [
    "NEG_INF",
    "BezoutCertificate",
    "CertificateError",
    "IntPoly",
    "NotCoprime",
    "PolySyntaxError",
    "RatPoly",
    "bareiss_det",
    "coprime_over_q",
    "hermite_form",
    "ideal_int_generator",
    "integer_roots",
    "perfect_power_decompose",
    "poly_eval",
    "poly_format",
    "poly_parse",
    "poly_shift",
    "rat_gcd",
    "resultant",
    "sylvester_matrix",
]
