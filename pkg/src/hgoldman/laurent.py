"""One-variable Laurent polynomials over Q.

A Laurent polynomial is held as ``(low, coeffs)``: the exponent of the first
coefficient and a list of Fractions (dense, highest degree last, no
trailing or leading zeros).  Q[t, 1/t] is a principal ideal domain; every
ideal is generated by a polynomial with nonzero constant term, unique once
made monic.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping


def from_terms(terms: Mapping[int, Fraction]) -> tuple[int, list[Fraction]]:
    exps = [n for n, c in terms.items() if c]
    if not exps:
        return 0, []
    low, high = min(exps), max(exps)
    return low, [Fraction(terms.get(n, 0)) for n in range(low, high + 1)]


def to_terms(low: int, coeffs: list[Fraction]) -> dict[int, Fraction]:
    return {low + i: c for i, c in enumerate(coeffs) if c}


def _trim(p: list[Fraction]) -> list[Fraction]:
    while p and not p[-1]:
        p.pop()
    return p


def poly_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    """Polynomial long division of coefficient lists (lowest degree first)."""
    b = _trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = _trim([Fraction(c) for c in a])
    if len(r) < len(b):
        return [], r
    q = [Fraction(0)] * (len(r) - len(b) + 1)
    lead = b[-1]
    while len(r) >= len(b) and r:
        shift = len(r) - len(b)
        c = r[-1] / lead
        q[shift] = c
        for i, bc in enumerate(b):
            r[shift + i] -= c * bc
        _trim(r)
    return q, r


def monic(p: list[Fraction]) -> list[Fraction]:
    p = _trim(list(p))
    if not p:
        return p
    lead = p[-1]
    return [c / lead for c in p]


def poly_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, poly_divmod(a, b)[1]
    return monic(a)


def laurent_gcd(polys: Iterable[tuple[int, list[Fraction]]]) -> list[Fraction]:
    """Monic generator, constant term nonzero, of the ideal the inputs generate.

    Returns ``[]`` if every input is zero.
    """
    g: list[Fraction] = []
    for _, coeffs in polys:
        g = poly_gcd(g, coeffs) if g else monic(coeffs)
    return g


def divides(g: list[Fraction], low: int, coeffs: list[Fraction]) -> bool:
    """Whether ``t^low * coeffs`` lies in the ideal of Q[t, 1/t] generated by ``g``.

    ``g`` must have nonzero constant term, so the power of t is a unit.
    """
    if not _trim(list(coeffs)):
        return True
    if not g:
        return False
    return not poly_divmod(coeffs, g)[1]
