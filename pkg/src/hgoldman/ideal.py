"""Ideals of QH through their classification pairs (V0, V).

An ideal is ``V0 + sum over nonzero cosets c of T(lift(c))(V)`` where V0 and
V are subspaces of Q(ker mu) and V is stable under translation by ker mu.
V is a Q[ker mu]-submodule, i.e. an ideal of the group ring of ker mu, and
is stored through generators normalized according to the backend:

* ``ExactFiniteKernel`` (ker mu finite): a reduced basis of V itself;
* ``LaurentRankOne`` (ker mu = Z): a single monic Laurent generator;
* ``Truncated(radius)``: the generators as given, with memberships decided
  by a bounded search that may answer ``unknown``.
"""

from __future__ import annotations

import enum
import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

from . import laurent
from .algebra import AlgebraElement, bracket, decompose, is_kernel_supported, singleton, translate
from .exceptions import InvalidPairError
from .group import (
    GroupElement,
    GroupSpec,
    KernelData,
    in_kernel,
    kernel_coordinates,
    lift,
    mu_is_zero,
)
from .linalg import Subspace

DEFAULT_RADIUS = 4


class Membership(enum.Enum):
    TRUE = "true"
    FALSE = "false"
    UNKNOWN = "unknown"

    @classmethod
    def of(cls, flag: bool) -> Membership:
        return cls.TRUE if flag else cls.FALSE

    def __str__(self):
        return self.value


def _all(answers: Iterable[Membership]) -> Membership:
    """Conjunction in three-valued logic."""
    result = Membership.TRUE
    for a in answers:
        if a is Membership.FALSE:
            return a
        if a is Membership.UNKNOWN:
            result = a
    return result


class Span(enum.Enum):
    FULL = "FULL"
    ZERO = "ZERO"

    def __str__(self):
        return self.value


FULL = Span.FULL
ZERO = Span.ZERO


@dataclass(frozen=True)
class Backend:
    kind: str
    radius: int | None = None

    def __str__(self):
        return f"{self.kind}({self.radius})" if self.kind == "Truncated" else self.kind


EXACT_FINITE_KERNEL = Backend("ExactFiniteKernel")
LAURENT_RANK_ONE = Backend("LaurentRankOne")


def truncated(radius: int = DEFAULT_RADIUS) -> Backend:
    if radius < 1:
        raise ValueError("radius must be positive")
    return Backend("Truncated", radius)


def choose_backend(spec: GroupSpec, kd: KernelData, radius: int = DEFAULT_RADIUS) -> Backend:
    if kd.kernel_rank == 0:
        return EXACT_FINITE_KERNEL
    if kd.kernel_rank == 1 and not spec.torsion_orders:
        return LAURENT_RANK_ONE
    return truncated(radius)


Basis = tuple[AlgebraElement, ...]


@dataclass(frozen=True)
class IdealPair:
    v0: Union[Basis, Span]
    v: Union[Basis, Span]
    backend: Backend

    @property
    def is_exact(self) -> bool:
        return self.backend.kind != "Truncated"


# --- the kernel group ker mu = Z^s x T -------------------------------------


def torsion_elements(spec: GroupSpec) -> list[GroupElement]:
    return [spec.element(None, t) for t in itertools.product(*(range(d) for d in spec.torsion_orders))]


def kernel_element(spec: GroupSpec, kd: KernelData, coords: Sequence[int], torsion=None) -> GroupElement:
    free = [0] * spec.free_rank
    for n, k in zip(coords, kd.kernel_basis):
        for i, a in enumerate(k.free):
            free[i] += n * a
    return spec.element(free, torsion)


def _check_kernel_supported(spec, kd, elems, what):
    for e in elems:
        if not is_kernel_supported(spec, kd, e):
            raise InvalidPairError(f"{what} element {e} is not supported in ker mu")


@lru_cache(maxsize=512)
def _span(basis: Basis) -> Subspace:
    return Subspace(basis)


def _finite_kernel_basis(spec: GroupSpec) -> Basis:
    return tuple(singleton(t) for t in torsion_elements(spec))


def _torsion_closure(spec: GroupSpec, gens: Iterable[AlgebraElement]) -> Basis:
    ts = torsion_elements(spec)
    return Subspace(translate(spec, t, g) for g in gens for t in ts).basis()


def _to_laurent(spec, kd, x: AlgebraElement):
    terms = {kernel_coordinates(spec, kd, g)[0]: c for g, c in x.items()}
    return laurent.from_terms(terms)


def _from_laurent(spec, kd, coeffs) -> AlgebraElement:
    return AlgebraElement({kernel_element(spec, kd, [n]): c for n, c in enumerate(coeffs) if c})


def make_pair(
    spec: GroupSpec,
    kd: KernelData,
    v0: Union[Iterable[AlgebraElement], Span] = (),
    v: Union[Iterable[AlgebraElement], Span] = ZERO,
    radius: int = DEFAULT_RADIUS,
) -> IdealPair:
    """Build a normalized pair from spanning sets for V0 and generators of V."""
    backend = choose_backend(spec, kd, radius)
    if v0 is not FULL:
        v0 = [e for e in v0 if e]
        _check_kernel_supported(spec, kd, v0, "V0")
        v0 = Subspace(v0).basis()
    if v is ZERO:
        return IdealPair(v0, ZERO, backend)
    if v is not FULL:
        v = [e for e in v if e]
        _check_kernel_supported(spec, kd, v, "V")
        if not v:
            return IdealPair(v0, ZERO, backend)
    if mu_is_zero(spec):
        raise InvalidPairError("V must be zero when the form vanishes")
    if v is FULL:
        return IdealPair(v0, FULL, backend)
    if backend == EXACT_FINITE_KERNEL:
        v = _torsion_closure(spec, v)
    elif backend == LAURENT_RANK_ONE:
        g = laurent.laurent_gcd(_to_laurent(spec, kd, e) for e in v)
        v = (_from_laurent(spec, kd, g),)
    else:
        v = tuple(v)
    return IdealPair(v0, v, backend)


def validate_pair(spec: GroupSpec, kd: KernelData, p: IdealPair) -> bool:
    if p.backend.kind != choose_backend(spec, kd).kind:
        raise InvalidPairError(f"backend {p.backend} does not fit this group")
    if p.v0 is not FULL:
        _check_kernel_supported(spec, kd, p.v0, "V0")
        if Subspace(p.v0).basis() != tuple(p.v0):
            raise InvalidPairError("V0 basis is not in reduced row-echelon form")
    if p.v is ZERO:
        return True
    if mu_is_zero(spec):
        raise InvalidPairError("V must be zero when the form vanishes")
    if p.v is FULL:
        return True
    _check_kernel_supported(spec, kd, p.v, "V")
    if p.backend == LAURENT_RANK_ONE:
        if len(p.v) != 1 or make_pair(spec, kd, (), p.v).v != tuple(p.v):
            raise InvalidPairError("V must be a single monic generator with lowest exponent 0")
    if p.backend == EXACT_FINITE_KERNEL:
        if Subspace(p.v).basis() != tuple(p.v):
            raise InvalidPairError("V basis is not in reduced row-echelon form")
        span = Subspace(p.v)
        for i in range(len(spec.torsion_orders)):
            t = spec.element(None, [int(j == i) for j in range(len(spec.torsion_orders))])
            for b in p.v:
                if not span.contains(translate(spec, t, b)):
                    raise InvalidPairError(f"V is not stable under translation by {t}")
    return True


# --- membership --------------------------------------------------------------


def _v0_contains(spec, kd, p: IdealPair, x: AlgebraElement) -> Membership:
    if p.v0 is FULL:
        return Membership.TRUE
    return Membership.of(_span(tuple(p.v0)).contains(x))


def _sign_characters(spec: GroupSpec, s: int):
    """All homomorphisms Z^s x T -> {1, -1}, as (free signs, torsion signs)."""
    torsion_choices = [(1, -1) if d % 2 == 0 else (1,) for d in spec.torsion_orders]
    for free_signs in itertools.product((1, -1), repeat=s):
        for tors_signs in itertools.product(*torsion_choices):
            yield free_signs, tors_signs


def _evaluate(spec, kd, x: AlgebraElement, character) -> Fraction:
    free_signs, tors_signs = character
    total = Fraction(0)
    for g, c in x.items():
        sign = 1
        for e, n in zip(free_signs, kernel_coordinates(spec, kd, g)):
            if e < 0 and n % 2:
                sign = -sign
        for e, t in zip(tors_signs, g.torsion):
            if e < 0 and t % 2:
                sign = -sign
        total += sign * c
    return total


def truncated_module_contains(
    spec: GroupSpec, kd: KernelData, gens: Sequence[AlgebraElement], y: AlgebraElement, radius: int
) -> Membership:
    """Decide ``y in Q[ker mu] * gens`` as far as a bounded search allows.

    Positive answers come from an explicit span of kernel translates of the
    generators whose kernel offsets lie within ``radius`` of the window
    relating the supports.  Negative answers come from a sign character of
    ker mu that kills every generator but not ``y``.
    """
    if not y:
        return Membership.TRUE
    if not gens:
        return Membership.FALSE
    s = kd.kernel_rank
    ycoords = [kernel_coordinates(spec, kd, g) for g in y.support]
    gcoords = [kernel_coordinates(spec, kd, g) for e in gens for g in e.support]
    ranges = []
    for i in range(s):
        lo = min(c[i] for c in ycoords) - max(c[i] for c in gcoords) - radius
        hi = max(c[i] for c in ycoords) - min(c[i] for c in gcoords) + radius
        ranges.append(range(lo, hi + 1))
    ts = torsion_elements(spec)
    span = Subspace()
    for offset in itertools.product(*ranges):
        base = kernel_element(spec, kd, offset)
        for t in ts:
            shift = base + t
            for g in gens:
                span.add(translate(spec, shift, g))
    if span.contains(y):
        return Membership.TRUE
    for chi in _sign_characters(spec, s):
        if _evaluate(spec, kd, y, chi) and not any(_evaluate(spec, kd, g, chi) for g in gens):
            return Membership.FALSE
    return Membership.UNKNOWN


def _v_contains(spec, kd, p: IdealPair, y: AlgebraElement) -> Membership:
    if not y or p.v is FULL:
        return Membership.TRUE
    if p.v is ZERO:
        return Membership.FALSE
    if p.backend == EXACT_FINITE_KERNEL:
        return Membership.of(_span(tuple(p.v)).contains(y))
    if p.backend == LAURENT_RANK_ONE:
        g = _to_laurent(spec, kd, p.v[0])[1]
        return Membership.of(laurent.divides(g, *_to_laurent(spec, kd, y)))
    return truncated_module_contains(spec, kd, p.v, y, p.backend.radius)


def contains(spec: GroupSpec, kd: KernelData, p: IdealPair, x: AlgebraElement) -> Membership:
    answers = []
    for c, part in decompose(spec, kd, x).items():
        if not any(c):
            answers.append(_v0_contains(spec, kd, p, part))
        else:
            shifted = translate(spec, -lift(spec, kd, c), part)
            answers.append(_v_contains(spec, kd, p, shifted))
    return _all(answers)


# --- comparison --------------------------------------------------------------


def _v0_equal(spec, kd, a, b) -> Membership:
    if a is FULL and b is FULL:
        return Membership.TRUE
    if a is FULL or b is FULL:
        if kd.kernel_rank:
            return Membership.FALSE
        full = Subspace(_finite_kernel_basis(spec)).basis()
        a = full if a is FULL else tuple(a)
        b = full if b is FULL else tuple(b)
    return Membership.of(tuple(a) == tuple(b))


def _v_equal(spec, kd, p: IdealPair, q: IdealPair) -> Membership:
    a, b = p.v, q.v
    if a is ZERO or b is ZERO:
        return Membership.of(a is b)
    if a is FULL and b is FULL:
        return Membership.TRUE
    if p.backend == EXACT_FINITE_KERNEL:
        full = Subspace(_finite_kernel_basis(spec)).basis()
        return Membership.of((full if a is FULL else tuple(a)) == (full if b is FULL else tuple(b)))
    if p.backend == LAURENT_RANK_ONE:
        one = [Fraction(1)]
        ga = one if a is FULL else _to_laurent(spec, kd, a[0])[1]
        gb = one if b is FULL else _to_laurent(spec, kd, b[0])[1]
        return Membership.of(ga == gb)
    unit = singleton(spec.zero())
    if a is FULL:
        return _v_contains(spec, kd, q, unit)
    if b is FULL:
        return _v_contains(spec, kd, p, unit)
    return _all(itertools.chain((_v_contains(spec, kd, q, g) for g in a), (_v_contains(spec, kd, p, g) for g in b)))


def pair_equal(spec: GroupSpec, kd: KernelData, p: IdealPair, q: IdealPair) -> Membership:
    return _all([_v0_equal(spec, kd, p.v0, q.v0), _v_equal(spec, kd, p, q)])


# --- construction and structure -----------------------------------------------


def ideal_from_generators(
    spec: GroupSpec, kd: KernelData, gens: Iterable[AlgebraElement], radius: int = DEFAULT_RADIUS
) -> IdealPair:
    """Classification pair of the ideal generated by ``gens``.

    Brackets never land in degree zero, so V0 is spanned by the degree-zero
    components of the generators; V is generated by the other components,
    each moved back to the kernel by its coset's lift.
    """
    v0, v = [], []
    for g in gens:
        for c, part in decompose(spec, kd, g).items():
            if any(c):
                v.append(translate(spec, -lift(spec, kd, c), part))
            else:
                v0.append(part)
    return make_pair(spec, kd, v0, v, radius)


def is_abelian(spec: GroupSpec, kd: KernelData, p: IdealPair) -> bool:
    return p.v is ZERO


def center(spec: GroupSpec, kd: KernelData, radius: int = DEFAULT_RADIUS) -> IdealPair:
    return IdealPair(FULL, ZERO, choose_backend(spec, kd, radius))


def derived_or_lower_central(spec: GroupSpec, kd: KernelData, m: int = 1, radius: int = DEFAULT_RADIUS) -> IdealPair:
    """The m-th derived (equivalently lower central) term, Q(H minus ker mu)."""
    if m < 1:
        raise ValueError("series index must be at least 1")
    backend = choose_backend(spec, kd, radius)
    if mu_is_zero(spec):
        return IdealPair((), ZERO, backend)
    return IdealPair((), FULL, backend)


def zero_ideal(spec: GroupSpec, kd: KernelData, radius: int = DEFAULT_RADIUS) -> IdealPair:
    return IdealPair((), ZERO, choose_backend(spec, kd, radius))


def whole_algebra(spec: GroupSpec, kd: KernelData, radius: int = DEFAULT_RADIUS) -> IdealPair:
    backend = choose_backend(spec, kd, radius)
    return IdealPair(FULL, ZERO if mu_is_zero(spec) else FULL, backend)


@dataclass(frozen=True)
class FiniteIdeals:
    pairs: tuple[IdealPair, ...]

    def __len__(self):
        return len(self.pairs)


@dataclass(frozen=True)
class InfiniteIdeals:
    """Witnessed by the pairwise distinct ideals ``V0 = span{[0] + c [k]}``."""

    spec: GroupSpec
    kd: KernelData
    kernel_element: GroupElement

    def member(self, c) -> IdealPair:
        zero = self.spec.zero()
        vec = singleton(zero) + singleton(self.kernel_element) * Fraction(c)
        return make_pair(self.spec, self.kd, [vec], ZERO)

    def describe(self) -> str:
        from .textio import format_group_element

        zero = format_group_element(self.spec.zero())[1:-1]
        k = format_group_element(self.kernel_element)[1:-1]
        return f"V0 = span{{1*[{zero}] + c*[{k}]}}, V = ZERO, c in Q"


def enumerate_if_finite(spec: GroupSpec, kd: KernelData) -> FiniteIdeals | InfiniteIdeals:
    if kd.kernel_rank == 0 and not spec.torsion_orders:
        origin = [singleton(spec.zero())]
        if spec.is_trivial:
            return FiniteIdeals((make_pair(spec, kd), make_pair(spec, kd, origin)))
        return FiniteIdeals(
            (
                make_pair(spec, kd),
                make_pair(spec, kd, origin),
                make_pair(spec, kd, (), origin),
                make_pair(spec, kd, origin, origin),
            )
        )
    if kd.kernel_rank:
        k = kd.kernel_basis[0]
    else:
        i = 0
        k = spec.element(None, [int(j == i) for j in range(len(spec.torsion_orders))])
    return InfiniteIdeals(spec, kd, k)


# --- sampling and the converse check ---------------------------------------------


def _rand_coeff(rng: random.Random) -> Fraction:
    c = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
    return c or Fraction(1)


def random_kernel_element(spec: GroupSpec, kd: KernelData, rng: random.Random, radius: int = 2) -> GroupElement:
    coords = [rng.randint(-radius, radius) for _ in range(kd.kernel_rank)]
    tors = [rng.randrange(d) for d in spec.torsion_orders]
    return kernel_element(spec, kd, coords, tors)


def sample_v(spec: GroupSpec, kd: KernelData, p: IdealPair, rng: random.Random, terms: int = 3) -> AlgebraElement:
    """A random element of V (zero if V is)."""
    if p.v is ZERO:
        return AlgebraElement()
    out = AlgebraElement()
    for _ in range(rng.randint(1, terms)):
        shift = random_kernel_element(spec, kd, rng)
        if p.v is FULL:
            out = out + singleton(shift) * _rand_coeff(rng)
        elif p.backend == EXACT_FINITE_KERNEL:
            out = out + rng.choice(p.v) * _rand_coeff(rng)
        else:
            out = out + translate(spec, shift, rng.choice(p.v)) * _rand_coeff(rng)
    return out


def sample_v0(spec: GroupSpec, kd: KernelData, p: IdealPair, rng: random.Random, terms: int = 2) -> AlgebraElement:
    if p.v0 is FULL:
        return AlgebraElement(
            {random_kernel_element(spec, kd, rng): _rand_coeff(rng) for _ in range(rng.randint(1, terms))}
        )
    if not p.v0:
        return AlgebraElement()
    return sum((b * _rand_coeff(rng) for b in rng.sample(list(p.v0), min(terms, len(p.v0)))), AlgebraElement())


def random_nonkernel(spec: GroupSpec, kd: KernelData, rng: random.Random, radius: int = 2) -> GroupElement:
    if mu_is_zero(spec):
        raise ValueError("every element lies in the kernel")
    while True:
        x = spec.element(
            [rng.randint(-radius, radius) for _ in range(spec.free_rank)],
            [rng.randrange(d) for d in spec.torsion_orders],
        )
        if not in_kernel(spec, kd, x):
            return x


def sample_member(spec: GroupSpec, kd: KernelData, p: IdealPair, rng: random.Random, cosets: int = 2) -> AlgebraElement:
    """A random element of the ideal described by ``p``."""
    out = sample_v0(spec, kd, p, rng)
    if p.v is not ZERO:
        for _ in range(rng.randint(1, cosets)):
            x = random_nonkernel(spec, kd, rng)
            out = out + translate(spec, x, sample_v(spec, kd, p, rng))
    return out


def converse_witness_check(
    spec: GroupSpec, kd: KernelData, p: IdealPair, samples: int = 100, seed: int = 0
) -> bool | tuple[AlgebraElement, GroupElement, GroupElement]:
    """Check ``[T(x)(v), [y]]`` lies in the ideal for sampled v in V, x, y.

    Returns True, or the first failing triple ``(v, x, y)``.
    """
    if p.v is ZERO:
        return True
    rng = random.Random(seed)
    for _ in range(samples):
        v = sample_v(spec, kd, p, rng)
        x = random_nonkernel(spec, kd, rng)
        y = spec.element(
            [rng.randint(-3, 3) for _ in range(spec.free_rank)],
            [rng.randrange(d) for d in spec.torsion_orders],
        )
        z = bracket(spec, translate(spec, x, v), singleton(y))
        if contains(spec, kd, p, z) is not Membership.TRUE:
            return v, x, y
    return True
