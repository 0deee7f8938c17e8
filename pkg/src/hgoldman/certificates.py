"""Replayable ad-word certificates for homogeneous components and transport.

Every word used here has zero net degree: it maps each ker-mu-homogeneous
component back to its own coset and scales it by a product of pairings that
depends only on the coset.  The helpers below compute those scalars directly
so that a certificate can be checked by replaying the word with
:func:`~hgoldman.algebra.ad_apply`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import AdWord, AlgebraElement, ad_apply, coset_of, decompose, translate
from .exceptions import KernelElementError
from .group import GroupElement, GroupSpec, KernelData, in_kernel, key_lemma_witness, lift, pairing


def word_factor(spec: GroupSpec, word: AdWord, x: GroupElement) -> int:
    """Scalar picked up by a homogeneous element of degree ``x`` under ``word``."""
    factor = 1
    pos = x
    for z in reversed(word):
        factor *= pairing(spec, z, pos)
        if not factor:
            return 0
        pos = pos + z
    return factor


def _word_a(xj: GroupElement) -> AdWord:
    return AdWord((-xj, xj))


def _word_b(xj: GroupElement, z: GroupElement) -> AdWord:
    return AdWord((xj - z, z, -z, z - xj))


@dataclass(frozen=True)
class Extraction:
    """Certificate isolating the component of X at ``target``.

    For a nonzero target, ``ad_apply(word, X) == scalar * component``.
    For the zero coset, ``scalar`` is None and the word kills the degree-zero
    part while scaling every other component ``c`` by ``factors[c]``; the
    component is then ``X - sum(other components)``.
    """

    target: tuple[int, ...]
    word: AdWord
    scalar: Fraction | None
    component: AlgebraElement
    factors: dict = field(default_factory=dict)


def _nonzero_degree_word(spec, kd, reps, target):
    """Eliminate every coset of ``reps`` except ``target``; return (word, scalar)."""
    xk = reps[target]
    word = AdWord()
    scalar = 1
    alive = {c: x for c, x in reps.items() if c != target}
    while alive:
        j = min(alive)
        xj = alive[j]
        if pairing(spec, xj, xk):
            step = _word_a(xj)
        else:
            z = key_lemma_witness(spec, kd, [xk, xj, xk - xj])
            step = _word_b(xj, z)
        f = word_factor(spec, step, xk)
        assert f, "target component annihilated"
        scalar *= f
        word = word.then(step)
        alive = {c: x for c, x in alive.items() if word_factor(spec, step, x)}
    return word, scalar


def extract_component(spec: GroupSpec, kd: KernelData, x: AlgebraElement, target) -> Extraction:
    parts = decompose(spec, kd, x)
    target = tuple(target)
    if target not in parts:
        raise KeyError(f"coset {target} does not occur in the element")
    zero = (0,) * kd.quotient_rank
    reps = {c: lift(spec, kd, c) for c in parts}
    if target != zero:
        nonzero = {c: r for c, r in reps.items() if c != zero}
        word, scalar = _nonzero_degree_word(spec, kd, nonzero, target)
        if zero in parts and not word:
            # only a degree-zero companion is left; any bracket kills it
            z = key_lemma_witness(spec, kd, [reps[target]])
            word = _word_a(z)
            scalar = word_factor(spec, word, reps[target])
        return Extraction(target, word, Fraction(scalar), parts[target])
    others = [c for c in parts if c != zero]
    if not others:
        return Extraction(target, AdWord(), Fraction(1), parts[target])
    z = key_lemma_witness(spec, kd, [reps[c] for c in others])
    word = _word_a(z)
    factors = {c: Fraction(word_factor(spec, word, reps[c])) for c in others}
    rest = AlgebraElement()
    for c in others:
        rest = rest + parts[c]
    return Extraction(target, word, None, x - rest, factors)


def check_extraction(spec: GroupSpec, kd: KernelData, x: AlgebraElement, ext: Extraction) -> bool:
    """Replay the certificate and compare against its claim, exactly."""
    image = ad_apply(spec, ext.word, x)
    parts = decompose(spec, kd, x)
    if ext.scalar is not None:
        return ext.scalar != 0 and image == ext.component * ext.scalar and parts[ext.target] == ext.component
    expected = AlgebraElement()
    recovered = x
    for c, f in ext.factors.items():
        if not f:
            return False
        expected = expected + parts[c] * f
        recovered = recovered - parts[c]
    return image == expected and recovered == ext.component and ext.component == parts[ext.target]


@dataclass(frozen=True)
class Transport:
    word: AdWord
    witness: GroupElement
    scalar: int
    shift: GroupElement
    result: AlgebraElement


def transport(spec: GroupSpec, kd: KernelData, x: AlgebraElement, y: GroupElement) -> Transport:
    """Move a homogeneous element of nonzero degree to the degree of ``y``.

    With ``x0 = lift(coset(X))`` and z pairing nontrivially with both ``x0``
    and ``y``, the word ``<-z, y, -x0, z>`` sends X to
    ``(<z,x0><y,z>)^2 T(y - x0)(X)``.
    """
    c = coset_of(spec, kd, x)
    if not any(c):
        raise KernelElementError("transport needs an element of nonzero degree")
    if in_kernel(spec, kd, y):
        raise KernelElementError(f"target {y} lies in the kernel")
    x0 = lift(spec, kd, c)
    z = key_lemma_witness(spec, kd, [x0, y])
    word = AdWord((-z, y, -x0, z))
    scalar = (pairing(spec, z, x0) * pairing(spec, y, z)) ** 2
    shift = y - x0
    return Transport(word, z, scalar, shift, translate(spec, shift, x) * scalar)
