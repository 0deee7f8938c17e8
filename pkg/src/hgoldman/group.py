"""Finitely generated abelian groups with an alternating integer form.

A group ``H = Z^r x Z/d_1 x ... x Z/d_k`` is described by a
:class:`GroupSpec`; the form lives on the free part only, since any
bilinear form into the integers vanishes on torsion.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import lattice
from .exceptions import KernelElementError, SpecError


@dataclass(frozen=True, order=True)
class GroupElement:
    """Canonical coordinates of an element of H.

    ``orders`` records the torsion moduli so that group operations can reduce
    residues; it takes no part in equality, hashing or ordering.
    """

    free: tuple[int, ...]
    torsion: tuple[int, ...] = ()
    orders: tuple[int, ...] = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        free = tuple(int(a) for a in self.free)
        if len(self.torsion) != len(self.orders):
            raise SpecError(
                f"torsion block has {len(self.torsion)} entries, expected {len(self.orders)}"
            )
        torsion = tuple(int(t) % d for t, d in zip(self.torsion, self.orders))
        object.__setattr__(self, "free", free)
        object.__setattr__(self, "torsion", torsion)

    def _check(self, other: GroupElement):
        if len(self.free) != len(other.free) or self.orders != other.orders:
            raise SpecError("group elements belong to different groups")

    def __add__(self, other: GroupElement) -> GroupElement:
        self._check(other)
        return GroupElement(
            tuple(a + b for a, b in zip(self.free, other.free)),
            tuple(a + b for a, b in zip(self.torsion, other.torsion)),
            self.orders,
        )

    def __neg__(self) -> GroupElement:
        return GroupElement(tuple(-a for a in self.free), tuple(-t for t in self.torsion), self.orders)

    def __sub__(self, other: GroupElement) -> GroupElement:
        return self + (-other)

    def __rmul__(self, n: int) -> GroupElement:
        return GroupElement(tuple(n * a for a in self.free), tuple(n * t for t in self.torsion), self.orders)

    def is_zero(self) -> bool:
        return not any(self.free) and not any(self.torsion)

    def __str__(self):
        from .textio import format_group_element

        return format_group_element(self)


@dataclass(frozen=True)
class GroupSpec:
    """The pair (H, form): free rank, torsion orders and the form matrix."""

    free_rank: int
    torsion_orders: tuple[int, ...] = ()
    form: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion_orders", tuple(int(d) for d in self.torsion_orders))
        object.__setattr__(self, "form", tuple(tuple(int(a) for a in row) for row in self.form))

    def element(self, free: Sequence[int] = None, torsion: Sequence[int] = None) -> GroupElement:
        free = tuple(free) if free is not None else (0,) * self.free_rank
        torsion = tuple(torsion) if torsion is not None else (0,) * len(self.torsion_orders)
        if len(free) != self.free_rank:
            raise SpecError(f"expected {self.free_rank} free coordinates, got {len(free)}")
        return GroupElement(free, torsion, self.torsion_orders)

    def zero(self) -> GroupElement:
        return self.element()

    def generator(self, i: int) -> GroupElement:
        """The i-th standard free generator (0-based)."""
        return self.element([int(j == i) for j in range(self.free_rank)])

    def conforms(self, x: GroupElement) -> bool:
        return len(x.free) == self.free_rank and x.orders == self.torsion_orders

    def check(self, x: GroupElement) -> GroupElement:
        if not self.conforms(x):
            raise SpecError(f"element {x!r} does not belong to this group")
        return x

    def pairing(self, x: GroupElement, y: GroupElement) -> int:
        return pairing(self, x, y)

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion_orders


def validate_spec(spec: GroupSpec) -> GroupSpec:
    r = spec.free_rank
    if r < 0:
        raise SpecError("free rank must be nonnegative")
    for d in spec.torsion_orders:
        if d < 2:
            raise SpecError(f"torsion order {d} is smaller than 2")
    m = spec.form
    if len(m) != r or any(len(row) != r for row in m):
        raise SpecError(f"form must be a {r}x{r} matrix")
    for i in range(r):
        if m[i][i] != 0:
            raise SpecError(f"form has nonzero diagonal entry at ({i + 1},{i + 1})")
        for j in range(i + 1, r):
            if m[i][j] != -m[j][i]:
                raise SpecError(f"form is not skew-symmetric at ({i + 1},{j + 1})")
    return spec


def pairing(spec: GroupSpec, x: GroupElement, y: GroupElement) -> int:
    """Evaluate ``free(x)^T M free(y)``; torsion pairs to zero."""
    spec.check(x)
    spec.check(y)
    xs, ys = x.free, y.free
    total = 0
    for i, a in enumerate(xs):
        if a:
            row = spec.form[i]
            total += a * sum(m * b for m, b in zip(row, ys))
    return total


def elem_add(x: GroupElement, y: GroupElement) -> GroupElement:
    return x + y


def elem_neg(x: GroupElement) -> GroupElement:
    return -x


def elem_zero(spec: GroupSpec) -> GroupElement:
    return spec.zero()


@dataclass(frozen=True)
class KernelData:
    """The kernel of x -> <x, ->, together with the quotient map onto Z^(r-s).

    ``projection`` (r-s rows) maps free coordinates onto canonical coordinates
    of the quotient; ``section`` is a fixed integer right inverse of it
    (r rows, r-s columns); ``kernel_coords`` (s rows) recovers the
    coordinates of a kernel vector in ``kernel_basis``.
    """

    kernel_basis: tuple[GroupElement, ...]
    projection: tuple[tuple[int, ...], ...]
    section: tuple[tuple[int, ...], ...]
    kernel_coords: tuple[tuple[int, ...], ...]
    kernel_rank: int

    @property
    def quotient_rank(self) -> int:
        return len(self.projection)


def kernel_data(spec: GroupSpec) -> KernelData:
    r = spec.free_rank
    kernel = lattice.integer_kernel([list(row) for row in spec.form], r)
    s = len(kernel)
    # rows of the projection: an HNF basis of the lattice orthogonal to the kernel
    proj = lattice.integer_kernel(kernel, r) if s else lattice.identity(r)
    section = lattice.right_inverse(proj, r) if proj else [[] for _ in range(r)]
    if s:
        coords = lattice.transpose(lattice.right_inverse(kernel, r), s)
    else:
        coords = []
    return KernelData(
        kernel_basis=tuple(spec.element(k) for k in kernel),
        projection=tuple(tuple(row) for row in proj),
        section=tuple(tuple(row) for row in section),
        kernel_coords=tuple(tuple(row) for row in coords),
        kernel_rank=s,
    )


def coset_rep(spec: GroupSpec, kd: KernelData, x: GroupElement) -> tuple[int, ...]:
    spec.check(x)
    return lattice.matvec(kd.projection, x.free)


def in_kernel(spec: GroupSpec, kd: KernelData, x: GroupElement) -> bool:
    return not any(coset_rep(spec, kd, x))


def lift(spec: GroupSpec, kd: KernelData, xbar: Sequence[int]) -> GroupElement:
    xbar = tuple(xbar)
    if len(xbar) != kd.quotient_rank:
        raise SpecError(f"coset has {len(xbar)} coordinates, expected {kd.quotient_rank}")
    return spec.element(lattice.matvec(kd.section, xbar))


def kernel_coordinates(spec: GroupSpec, kd: KernelData, k: GroupElement) -> tuple[int, ...]:
    """Coordinates of the free part of a kernel element in ``kernel_basis``."""
    return lattice.matvec(kd.kernel_coords, spec.check(k).free)


def mu_is_zero(spec: GroupSpec) -> bool:
    return not any(any(row) for row in spec.form)


def _base_witness(spec: GroupSpec, x: GroupElement) -> GroupElement:
    for i in range(spec.free_rank):
        e = spec.generator(i)
        if pairing(spec, x, e):
            return e
    raise KernelElementError(f"{x} lies in the kernel of the form")


def key_lemma_witness(spec: GroupSpec, kd: KernelData, xs: Iterable[GroupElement]) -> GroupElement:
    """Return z with ``<x, z> != 0`` for every x in ``xs``.

    The first element is handled by scanning the standard generators; each
    further element either keeps the previous witness u or replaces it by
    ``u + (1 + sum |<x_i, u>|) v`` where v is the scan witness of the new
    element.
    """
    xs = list(xs)
    if not xs:
        raise ValueError("key_lemma_witness needs at least one element")
    for x in xs:
        spec.check(x)
        if in_kernel(spec, kd, x):
            raise KernelElementError(f"{x} lies in the kernel of the form")
    u = _base_witness(spec, xs[0])
    for n in range(1, len(xs)):
        xn = xs[n]
        if pairing(spec, xn, u):
            continue
        v = _base_witness(spec, xn)
        c = 1 + sum(abs(pairing(spec, xi, u)) for xi in xs[:n])
        u = u + c * v
    return u
