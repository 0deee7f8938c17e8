"""Exact arithmetic in the homological Goldman Lie algebra QH.

Elements are finitely supported maps from H to the rationals.  The bracket
of basis vectors is ``[[x], [y]] = <x, y> [x + y]``.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Iterator, Mapping, Sequence

from .exceptions import NotHomogeneousError, SpecError
from .group import GroupElement, GroupSpec, KernelData, coset_rep, pairing


class AlgebraElement:
    """A finite rational combination ``sum c_x [x]``; zero coefficients are pruned.

    Instances are treated as immutable values.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[GroupElement, Rational] | Iterable[tuple[GroupElement, Rational]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[GroupElement, Fraction] = {}
        for x, c in items:
            acc[x] = acc.get(x, 0) + Fraction(c)
        self._terms = {x: c for x, c in acc.items() if c}
        self._hash = None

    @classmethod
    def _from_clean(cls, terms: dict) -> AlgebraElement:
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    def items(self) -> list[tuple[GroupElement, Fraction]]:
        """Terms in canonical key order."""
        return sorted(self._terms.items())

    def __iter__(self) -> Iterator[tuple[GroupElement, Fraction]]:
        return iter(self.items())

    @property
    def support(self) -> list[GroupElement]:
        return sorted(self._terms)

    def coefficient(self, x: GroupElement) -> Fraction:
        return self._terms.get(x, Fraction(0))

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        terms = dict(self._terms)
        for x, c in other._terms.items():
            v = terms.get(x, 0) + c
            if v:
                terms[x] = v
            else:
                terms.pop(x, None)
        return AlgebraElement._from_clean(terms)

    def __neg__(self) -> AlgebraElement:
        return AlgebraElement._from_clean({x: -c for x, c in self._terms.items()})

    def __sub__(self, other: AlgebraElement) -> AlgebraElement:
        return self + (-other)

    def __mul__(self, c) -> AlgebraElement:
        c = Fraction(c)
        if not c:
            return AlgebraElement()
        return AlgebraElement._from_clean({x: c * v for x, v in self._terms.items()})

    __rmul__ = __mul__

    def __repr__(self):
        from .textio import format_element

        return f"AlgebraElement({format_element(self)!r})"

    def __str__(self):
        from .textio import format_element

        return format_element(self)


def singleton(x: GroupElement) -> AlgebraElement:
    return AlgebraElement._from_clean({x: Fraction(1)})


def add(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    return x + y


def scale(c, x: AlgebraElement) -> AlgebraElement:
    return x * c


def linear_combination(terms: Iterable[tuple[Rational, AlgebraElement]]) -> AlgebraElement:
    acc: dict[GroupElement, Fraction] = defaultdict(Fraction)
    for c, x in terms:
        for g, v in x._terms.items():
            acc[g] += c * v
    return AlgebraElement(acc)


def _check(spec: GroupSpec, x: AlgebraElement):
    for g in x._terms:
        if not spec.conforms(g):
            raise SpecError(f"support element {g} does not belong to the group")


def bracket(spec: GroupSpec, x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    _check(spec, x)
    _check(spec, y)
    acc: dict[GroupElement, Fraction] = defaultdict(Fraction)
    for a, c in x._terms.items():
        for b, d in y._terms.items():
            p = pairing(spec, a, b)
            if p:
                acc[a + b] += c * d * p
    return AlgebraElement(acc)


def translate(spec: GroupSpec, x: GroupElement, y: AlgebraElement) -> AlgebraElement:
    """Shift the support of ``y`` by ``x``."""
    spec.check(x)
    _check(spec, y)
    return AlgebraElement._from_clean({x + g: c for g, c in y._terms.items()})


class AdWord(tuple):
    """The operator ``ad([z_1]) o ... o ad([z_m])``; the last entry acts first."""

    def __new__(cls, entries: Iterable[GroupElement] = ()):
        return super().__new__(cls, entries)

    def then(self, other: AdWord) -> AdWord:
        """The word applying ``self`` first and ``other`` afterwards."""
        return AdWord(tuple(other) + tuple(self))

    def __str__(self):
        return "<" + ", ".join(str(z) for z in self) + ">"


def ad_apply(spec: GroupSpec, word: Sequence[GroupElement], x: AlgebraElement) -> AlgebraElement:
    for z in reversed(word):
        x = bracket(spec, singleton(z), x)
    return x


def decompose(spec: GroupSpec, kd: KernelData, x: AlgebraElement) -> dict[tuple[int, ...], AlgebraElement]:
    """Split ``x`` into its ker-mu-homogeneous components, keyed by coset."""
    _check(spec, x)
    parts: dict[tuple[int, ...], dict] = defaultdict(dict)
    for g, c in x._terms.items():
        parts[coset_rep(spec, kd, g)][g] = c
    return {k: AlgebraElement._from_clean(parts[k]) for k in sorted(parts)}


def coset_of(spec: GroupSpec, kd: KernelData, x: AlgebraElement) -> tuple[int, ...]:
    """The coset of a nonzero homogeneous element."""
    parts = decompose(spec, kd, x)
    if len(parts) != 1:
        raise NotHomogeneousError(f"element spans {len(parts)} cosets")
    return next(iter(parts))


def is_kernel_supported(spec: GroupSpec, kd: KernelData, x: AlgebraElement) -> bool:
    return all(not any(coset_rep(spec, kd, g)) for g in x._terms)
