"""Seeded random group and algebra elements for property checks."""

from __future__ import annotations

import random
from fractions import Fraction

from .algebra import AlgebraElement, singleton
from .group import GroupElement, GroupSpec, KernelData
from .ideal import random_kernel_element, random_nonkernel

__all__ = [
    "random_coefficient",
    "random_group_element",
    "random_element",
    "random_homogeneous",
    "random_kernel_element",
    "random_nonkernel",
    "random_nonkernel_tuple",
]


def random_coefficient(rng: random.Random) -> Fraction:
    c = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
    return c or Fraction(1)


def random_group_element(spec: GroupSpec, rng: random.Random, radius: int = 2) -> GroupElement:
    return spec.element(
        [rng.randint(-radius, radius) for _ in range(spec.free_rank)],
        [rng.randrange(d) for d in spec.torsion_orders],
    )


def random_element(spec: GroupSpec, rng: random.Random, radius: int = 2, max_terms: int = 4) -> AlgebraElement:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        terms[random_group_element(spec, rng, radius)] = random_coefficient(rng)
    return AlgebraElement(terms)


def random_homogeneous(
    spec: GroupSpec, kd: KernelData, rng: random.Random, degree: GroupElement, max_terms: int = 3
) -> AlgebraElement:
    """A random element supported in the coset of ``degree``."""
    out = AlgebraElement()
    while not out:
        for _ in range(rng.randint(1, max_terms)):
            out = out + singleton(degree + random_kernel_element(spec, kd, rng)) * random_coefficient(rng)
    return out


def random_nonkernel_tuple(
    spec: GroupSpec, kd: KernelData, rng: random.Random, size: int, radius: int = 3
) -> list[GroupElement]:
    return [random_nonkernel(spec, kd, rng, radius) for _ in range(size)]

