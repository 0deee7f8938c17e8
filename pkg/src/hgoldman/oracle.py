"""Brute-force truncated ideal closure, used to cross-check the classifier.

The closure works inside a box of H (free coordinates bounded in max-norm,
torsion unconstrained).  Starting from the span of the generators it keeps
bracketing with basis singletons [y], y in the box, and discards any result
whose support leaves the box.  It only ever finds true memberships.

This module deliberately avoids the kernel/coset machinery and the ideal
engine; the bracket with a singleton is evaluated from the form directly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from .algebra import AlgebraElement
from .exceptions import SpecError
from .group import GroupElement, GroupSpec
from .ideal import Membership


@dataclass(frozen=True)
class Box:
    radius: int

    def __post_init__(self):
        if self.radius < 1:
            raise ValueError("box radius must be at least 1")

    def holds(self, x: GroupElement) -> bool:
        return all(abs(a) <= self.radius for a in x.free)

    def elements(self, spec: GroupSpec) -> list[GroupElement]:
        free = itertools.product(range(-self.radius, self.radius + 1), repeat=spec.free_rank)
        tors = list(itertools.product(*(range(d) for d in spec.torsion_orders)))
        return sorted(spec.element(f, t) for f in free for t in tors)


class _Echelon:
    """Row echelon form (not reduced) over sparse dict vectors."""

    def __init__(self):
        self.rows: dict = {}

    def reduce(self, v: dict) -> dict:
        v = dict(v)
        while v:
            p = min(v)
            row = self.rows.get(p)
            if row is None:
                return v
            c = v[p]
            for k, a in row.items():
                w = v.get(k, 0) - c * a
                if w:
                    v[k] = w
                else:
                    v.pop(k, None)
        return v

    def add(self, v: dict) -> dict | None:
        r = self.reduce(v)
        if not r:
            return None
        p = min(r)
        inv = 1 / r[p]
        r = {k: a * inv for k, a in r.items()}
        self.rows[p] = r
        return r

    def contains(self, v: dict) -> bool:
        # pivots are minimal keys; keep stripping the smallest remaining key
        r = dict(v)
        while r:
            p = min(r)
            row = self.rows.get(p)
            if row is None:
                return False
            c = r[p]
            for k, a in row.items():
                w = r.get(k, 0) - c * a
                if w:
                    r[k] = w
                else:
                    r.pop(k, None)
        return True


def _key(x: GroupElement) -> tuple:
    return (x.free, x.torsion)


@dataclass
class Closure:
    spec: GroupSpec
    box: Box
    basis: list[dict]
    _echelon: _Echelon

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def basis_elements(self) -> list[AlgebraElement]:
        spec = self.spec
        return [AlgebraElement({spec.element(f, t): c for (f, t), c in row.items()}) for row in self.basis]


def truncated_closure(spec: GroupSpec, gens: Iterable[AlgebraElement], box: Box | int) -> Closure:
    if isinstance(box, int):
        box = Box(box)
    radius = box.radius
    orders = spec.torsion_orders
    form = spec.form
    ech = _Echelon()
    basis: list[dict] = []
    queue: list[dict] = []
    for g in gens:
        for x, _ in g.items():
            if not spec.conforms(x):
                raise SpecError(f"generator element {x} does not belong to the group")
            if not box.holds(x):
                raise ValueError(f"generator support {x} lies outside the box")
        r = ech.add({_key(x): c for x, c in g.items()})
        if r is not None:
            basis.append(r)
            queue.append(r)
    partners = [_key(y) for y in box.elements(spec)]
    covectors: dict = {}
    while queue:
        vec = queue.pop()
        terms = []
        for (xf, xt), c in vec.items():
            cov = covectors.get(xf)
            if cov is None:
                cov = covectors[xf] = tuple(sum(a * row[j] for a, row in zip(xf, form)) for j in range(len(xf)))
            terms.append((xf, xt, c, cov))
        for yf, yt in partners:
            out: dict = {}
            inside = True
            for xf, xt, c, cov in terms:
                p = sum(a * b for a, b in zip(cov, yf))
                if not p:
                    continue
                sf = tuple(a + b for a, b in zip(xf, yf))
                if any(a > radius or a < -radius for a in sf):
                    inside = False
                    break
                st = tuple((a + b) % d for a, b, d in zip(xt, yt, orders))
                k = (sf, st)
                out[k] = out.get(k, 0) + c * p
            if not inside:
                continue
            out = {k: v for k, v in out.items() if v}
            if not out:
                continue
            r = ech.add(out)
            if r is not None:
                basis.append(r)
                queue.append(r)
    return Closure(spec, box, basis, ech)


def oracle_contains(closure: Closure, x: AlgebraElement) -> Membership:
    for g, _ in x.items():
        if not closure.box.holds(g):
            raise ValueError(f"probe support {g} lies outside the box")
    if closure._echelon.contains({_key(g): c for g, c in x.items()}):
        return Membership.TRUE
    return Membership.UNKNOWN
