"""Exact counts of maximal chord diagrams.

All values are Python ints; nothing in this module touches floating point and
every division is checked to be exact.
"""

from __future__ import annotations

import logging
import math
import threading
from dataclasses import dataclass
from functools import lru_cache

from sympy import divisors
from sympy import totient as _sympy_totient

from .errors import InvariantViolationError, PreconditionError

logger = logging.getLogger(__name__)


def exact_div(numerator: int, denominator: int, *, what: str) -> int:
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise InvariantViolationError(f"{what}: {numerator} is not divisible by {denominator}")
    return quotient


def _check_genus(g: int, minimum: int) -> None:
    if g < minimum:
        raise PreconditionError(f"genus must be >= {minimum}, got {g}")


def binomial(n: int, k: int) -> int:
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def totient(q: int) -> int:
    if q < 1:
        raise PreconditionError(f"totient is defined for q >= 1, got {q}")
    return int(_sympy_totient(q))


def catalan(n: int) -> int:
    return exact_div(binomial(2 * n, n), n + 1, what="catalan")


def double_factorial(m: int) -> int:
    """m!!, with (-1)!! = 0!! = 1. (2n-1)!! counts the chord diagrams on 2n points."""
    if m < -1:
        raise PreconditionError(f"double factorial undefined for {m}")
    result = 1
    for k in range(m, 0, -2):
        result *= k
    return result


@lru_cache(maxsize=None)
def mu(g: int) -> int:
    """(4g)! / (4^g (2g+1)!): labelled maximal diagrams with 2g chords."""
    _check_genus(g, 0)
    return exact_div(math.factorial(4 * g), 4**g * math.factorial(2 * g + 1), what=f"mu({g})")


def _even_divisor_term(q: int, k: int) -> int:
    total = 0
    for gamma in range(k // 4 + 1):
        total += binomial(k, 4 * gamma) * mu(gamma) * q ** (2 * gamma)
    return totient(q) * total


def _odd_divisor_term(q: int, k: int) -> int:
    half = k // 2
    inner = exact_div(q**half * math.factorial(k), 2**half * math.factorial(half + 1), what=f"odd term q={q}")
    return totient(q) * inner


def d_star(g: int) -> int:
    """Maximal diagrams with 2g chords up to rotation.

    Burnside over C_4g. The identity contributes mu(g); the odd-divisor sum
    starts at q = 3 since q = 1 is the identity again.
    """
    _check_genus(g, 1)
    points = 4 * g
    total = mu(g)
    for q in divisors(points):
        q = int(q)
        k = points // q
        if q % 2 == 0:
            total += _even_divisor_term(q, k)
        elif q > 1:
            total += _odd_divisor_term(q, k)
    return exact_div(total, points, what=f"d_star({g})")


_parallel_table: list[int] = [1, 1]
_parallel_lock = threading.Lock()


def _parallel_at(table: list[int], g: int) -> int:
    return table[g] if g >= 0 else 0


def d_parallel(g: int) -> int:
    """Type II maximal diagrams with 2g chords (rooted one-vertex one-face maps, g edges).

    Four-term linear recursion with initial values 1, 1 at g = 0, 1 and 0 below.
    """
    _check_genus(g, 0)
    with _parallel_lock:
        table = _parallel_table
        for h in range(len(table), g + 1):
            signed = (
                -(4 * h - 1) * _parallel_at(table, h - 1)
                + h * (2 * h - 3) * (10 * h - 9) * _parallel_at(table, h - 2)
                + 30 * binomial(2 * h - 3, 3) * _parallel_at(table, h - 3)
                - 240 * binomial(2 * h - 3, 5) * _parallel_at(table, h - 4)
            )
            value = exact_div(signed, h + 1, what=f"d_parallel({h})")
            if value < 0:
                raise InvariantViolationError(f"d_parallel({h}) came out negative: {value}")
            table.append(value)
        return table[g]


def d_vertical(g: int) -> int:
    """Type I maximal diagrams: a horizontal chord can go into 2g-1 slots of a type II one."""
    _check_genus(g, 1)
    return (2 * g - 1) * d_parallel(g - 1)


def d_circle(g: int) -> int:
    """Maximal diagrams with 2g chords up to all dihedral symmetries."""
    _check_genus(g, 1)
    return exact_div(2 * d_star(g) + d_vertical(g) + d_parallel(g), 4, what=f"d_circle({g})")


def d_circle_from_fixed(g: int, rotation_fixed_sum: int, type1_fixed: int, type2_fixed: int) -> int:
    """Burnside over D_4g before the axis-conjugacy shortcut.

    There are 2g reflections of each type, each fixing the same number of
    maximal diagrams as its canonical representative.
    """
    _check_genus(g, 1)
    total = rotation_fixed_sum + 2 * g * (type1_fixed + type2_fixed)
    return exact_div(total, 8 * g, what=f"dihedral Burnside sum at g={g}")


@dataclass(frozen=True)
class CountRow:
    g: int
    d_star: int
    d_type1: int
    d_type2: int
    d_all: int


def count_row(g: int) -> CountRow:
    return CountRow(g=g, d_star=d_star(g), d_type1=d_vertical(g), d_type2=d_parallel(g), d_all=d_circle(g))


def count_table(max_genus: int) -> list[CountRow]:
    _check_genus(max_genus, 1)
    rows = [count_row(g) for g in range(1, max_genus + 1)]
    logger.debug(f"computed {len(rows)} count rows up to g={max_genus}")
    return rows
