"""Least-period grids as published for ``x^2 + b`` and ``x^3 + b``.

Keys are ``(b, k)`` for ``1 <= b, k <= 6``; values are ``{prime: exponent}``
transcribed cell by cell.  Kept verbatim so the computed grids can be diffed
against them; several cells are not least periods (see README).
"""

from __future__ import annotations

import math


def _grid(rows: list[list[str]]) -> dict[tuple[int, int], dict[int, int]]:
    out = {}
    for b, row in enumerate(rows, start=1):
        for k, cell in enumerate(row, start=1):
            exps: dict[int, int] = {}
            for part in cell.split("·"):
                p, _, e = part.partition("^")
                exps[int(p)] = int(e or 1)
            out[b, k] = exps
    return out


QUADRATIC = _grid(
    [
        ["5", "2·5", "2·3·5·13", "2·3·5·13", "2·3·5·13·29", "2·3·5·13·29"],
        ["3^2", "2·3^2", "2·3^2·17", "2·3^2·17", "2·3^2·5·11·17", "2·3^2·5·11·17"],
        ["13", "2·13", "2·3·7·13", "2·3·7·13", "2·3·5·7·13·37", "2·3·5·7·13·37"],
        ["17", "2·5·17", "2·3·5^2·17", "2^2·3·5^2·17", "2^2·3·5^2·17·41", "2^2·3·5^2·13·17·41"],
        ["3·7", "2·3·7", "2·3·7·29", "2·3^2·7·29", "2·3^2·5·7·29", "2·3^2·5·7·29"],
        ["5^2", "2·5^2·7", "2·3·5^2·7·11", "2·3·5^2·7·11", "2·3·5^2·7^2·11", "2·3·5^2·7^2·11"],
    ]
)

_CUBIC_ODD_B = [
    "2·7",
    "2·7·13",
    "2·3·7·13",
    "2^2·3·7·11·13·17·31",
    "2^2·3·5·7·13·17·31·43",
    "2^2·3·5·7·13·17·19·31·43",
]
_CUBIC_EVEN_B = [
    "2·7",
    "2·7·13",
    "2·3·7·13",
    "2·3·7·11·13·17·31",
    "2·3·5·7·13·17·31·43",
    "2·3·5·7·13·17·19·31·43",
]

CUBIC = _grid([_CUBIC_ODD_B, _CUBIC_EVEN_B] * 3)

TEMPLATES = {"x^2+{b}": QUADRATIC, "x^3+{b}": CUBIC}


def value(exps: dict[int, int]) -> int:
    return math.prod(p**e for p, e in exps.items())


def quadratic_constant(b: int, i: int) -> int:
    """Published ideal constant for ``(x^2 + b, (x+i)^2 + b)``."""
    if i % 2:
        return i * (i * i + 4 * b)
    j = i // 2
    return 4 * j * (j * j + b)


def cubic_constant(b: int, i: int) -> int:
    """Published ideal constant for ``(x^3 + b, (x+i)^3 + b)``, sign dropped.

    The published formula does not involve ``b``.
    """
    if i % 3:
        return abs(-(i**7) - 27 * i)
    j = i // 3
    return abs(-(3**5) * j**7 - 9 * j)


def quadratic_cofactors(b: int, i: int) -> tuple[list[int], list[int]]:
    """Published ``(a_i, b_i)`` coefficient lists (ascending) for ``x^2 + b``."""
    if i % 2:
        return [3 * i, 2], [i, -2]
    j = i // 2
    return [3 * j, 1], [j, -1]


def cubic_cofactors(b: int, i: int) -> tuple[list[int], list[int]]:
    """Published ``(a_i, b_i)`` coefficient lists (ascending) for ``x^3 + b``.

    Transcribed literally, including the ``i``/``j`` mix in the constant
    term of ``a_i`` when ``i = 3j``.
    """
    if i % 3:
        return [10 * i**4 - 18 * i, 15 * i**3 - 9, 6 * i**2], [-(i**4) - 9 * i, 3 * i**3 + 9, -6 * i**2]
    j = i // 3
    return [90 * i**4 - 6 * i, 45 * j**3 - 1, 6 * j**2], [-9 * j**4 - 3 * j, 9 * j**3 + 1, -6 * j**2]
