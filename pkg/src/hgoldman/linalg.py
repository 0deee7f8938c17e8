"""Sparse exact row reduction over the rationals.

Vectors are :class:`~hgoldman.algebra.AlgebraElement` values; coordinates
are indexed by group elements in canonical key order.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .algebra import AlgebraElement


class Subspace:
    """Reduced row-echelon basis of a finite-dimensional subspace of QH.

    Each basis vector has a pivot (its smallest key) with coefficient 1, and
    no other basis vector has a nonzero entry at that pivot.
    """

    def __init__(self, vectors: Iterable[AlgebraElement] = ()):
        self._rows: dict = {}
        for v in vectors:
            self.add(v)

    def __len__(self):
        return len(self._rows)

    @property
    def dimension(self) -> int:
        return len(self._rows)

    def basis(self) -> tuple[AlgebraElement, ...]:
        return tuple(self._rows[p] for p in sorted(self._rows))

    def reduce(self, v: AlgebraElement) -> AlgebraElement:
        """The remainder of ``v`` after eliminating every pivot coordinate."""
        for p, row in self._rows.items():
            c = v.coefficient(p)
            if c:
                v = v - row * c
        return v

    def contains(self, v: AlgebraElement) -> bool:
        return not self.reduce(v)

    __contains__ = contains

    def add(self, v: AlgebraElement) -> bool:
        """Extend the span by ``v``; return whether the dimension grew."""
        r = self.reduce(v)
        if not r:
            return False
        p = r.support[0]
        r = r * (Fraction(1) / r.coefficient(p))
        for q, row in list(self._rows.items()):
            c = row.coefficient(p)
            if c:
                self._rows[q] = row - r * c
        self._rows[p] = r
        return True

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.basis() == other.basis()
