"""Seeded property suites over a single group spec.

Each suite returns a :class:`SuiteResult`; :func:`run_all` drives them for
the ``verify`` command.  Output is deterministic for a given seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import sampling
from .algebra import ad_apply, bracket, decompose, singleton, translate
from .certificates import check_extraction, extract_component, transport
from .group import GroupSpec, KernelData, key_lemma_witness, mu_is_zero, pairing
from .ideal import (
    Membership,
    center,
    contains,
    converse_witness_check,
    derived_or_lower_central,
    ideal_from_generators,
    is_abelian,
    pair_equal,
    sample_member,
)
from .oracle import Box, oracle_contains, truncated_closure
from .textio import format_element

ORACLE_MAX_BOX = 400


@dataclass
class SuiteResult:
    name: str
    cases: int
    failures: list[str]
    skipped: str | None = None

    @property
    def passed(self) -> bool:
        return not self.failures

    def line(self) -> str:
        if self.skipped:
            return f"SKIP {self.name}: {self.skipped}"
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} {self.name} (cases={self.cases})"
        if self.failures:
            text += f": {len(self.failures)} failure(s); first: {self.failures[0]}"
        return text


def lie_axioms(spec: GroupSpec, kd: KernelData, rng: random.Random, cases: int) -> SuiteResult:
    failures = []
    for _ in range(cases):
        x, y, z = (sampling.random_element(spec, rng) for _ in range(3))
        if bracket(spec, x, y) != -bracket(spec, y, x):
            failures.append(f"antisymmetry: X={format_element(x)} Y={format_element(y)}")
        jac = (
            bracket(spec, x, bracket(spec, y, z))
            + bracket(spec, y, bracket(spec, z, x))
            + bracket(spec, z, bracket(spec, x, y))
        )
        if jac:
            failures.append(f"jacobi: X={format_element(x)} Y={format_element(y)} Z={format_element(z)}")
        allowed = {tuple(a + b for a, b in zip(c, d)) for c in decompose(spec, kd, x) for d in decompose(spec, kd, y)}
        if not set(decompose(spec, kd, bracket(spec, x, y))) <= allowed:
            failures.append(f"grading: X={format_element(x)} Y={format_element(y)}")
    return SuiteResult("lie-axioms", cases, failures)


def key_lemma(spec: GroupSpec, kd: KernelData, rng: random.Random, cases: int) -> SuiteResult:
    if mu_is_zero(spec):
        return SuiteResult("key-lemma", 0, [], skipped="the form vanishes")
    failures = []
    for _ in range(cases):
        xs = sampling.random_nonkernel_tuple(spec, kd, rng, rng.randint(1, 8))
        z = key_lemma_witness(spec, kd, xs)
        if any(pairing(spec, x, z) == 0 for x in xs):
            failures.append(f"witness {z} for {[str(x) for x in xs]}")
    return SuiteResult("key-lemma", cases, failures)


def certificates(spec: GroupSpec, kd: KernelData, rng: random.Random, cases: int) -> SuiteResult:
    if mu_is_zero(spec):
        return SuiteResult("certificates", 0, [], skipped="the form vanishes")
    failures = []
    for _ in range(cases):
        x = sampling.random_element(spec, rng, max_terms=5)
        for c in decompose(spec, kd, x):
            if not check_extraction(spec, kd, x, extract_component(spec, kd, x, c)):
                failures.append(f"extract {c} from {format_element(x)}")
        deg = sampling.random_nonkernel(spec, kd, rng)
        h = sampling.random_homogeneous(spec, kd, rng, deg)
        y = sampling.random_nonkernel(spec, kd, rng)
        t = transport(spec, kd, h, y)
        if ad_apply(spec, t.word, h) != t.result or t.result != translate(spec, t.shift, h) * t.scalar:
            failures.append(f"transport {format_element(h)} to {y}")
    return SuiteResult("certificates", cases, failures)


def _random_generators(spec, rng, radius):
    return [sampling.random_element(spec, rng, radius, max_terms=3) for _ in range(rng.randint(1, 3))]


def oracle_differential(
    spec: GroupSpec, kd: KernelData, rng: random.Random, cases: int, radius: int = 3
) -> SuiteResult:
    box = Box(radius)
    probes = box.elements(spec)
    if len(probes) > ORACLE_MAX_BOX:
        return SuiteResult("oracle-differential", 0, [], skipped=f"box of {len(probes)} elements is too large")
    failures = []
    for _ in range(cases):
        gens = _random_generators(spec, rng, max(radius - 1, 1))
        pair = ideal_from_generators(spec, kd, gens)
        closure = truncated_closure(spec, gens, box)
        for x in [singleton(p) for p in probes] + gens:
            if oracle_contains(closure, x) is Membership.TRUE and contains(spec, kd, pair, x) is not Membership.TRUE:
                failures.append(f"{format_element(x)} for generators {[format_element(g) for g in gens]}")
    return SuiteResult("oracle-differential", cases, failures)


def ideal_laws(spec: GroupSpec, kd: KernelData, rng: random.Random, cases: int) -> SuiteResult:
    failures = []
    for i in range(cases):
        gens = _random_generators(spec, rng, 2)
        pair = ideal_from_generators(spec, kd, gens)
        for g in gens:
            if contains(spec, kd, pair, g) is not Membership.TRUE:
                failures.append(f"round trip: {format_element(g)}")
        extra = bracket(spec, rng.choice(gens), singleton(sampling.random_group_element(spec, rng)))
        if pair_equal(spec, kd, pair, ideal_from_generators(spec, kd, gens + [extra])) is not Membership.TRUE:
            failures.append(f"uniqueness: {[format_element(g) for g in gens]}")
        member = sample_member(spec, kd, pair, rng)
        other = sampling.random_element(spec, rng)
        if contains(spec, kd, pair, bracket(spec, member, other)) is Membership.FALSE:
            failures.append(f"ideal property: {format_element(member)}")
        if not mu_is_zero(spec) and converse_witness_check(spec, kd, pair, samples=5, seed=i) is not True:
            failures.append(f"converse: {[format_element(g) for g in gens]}")
    return SuiteResult("ideal-laws", cases, failures)


def structure(spec: GroupSpec, kd: KernelData, rng: random.Random, cases: int) -> SuiteResult:
    failures = []
    z = center(spec, kd)
    derived = [derived_or_lower_central(spec, kd, m) for m in range(1, 6)]
    for d in derived[1:]:
        if pair_equal(spec, kd, derived[0], d) is not Membership.TRUE:
            failures.append("derived series is not constant")
    for _ in range(cases):
        x = sampling.random_element(spec, rng)
        degrees = [not any(c) for c in decompose(spec, kd, x)]
        central = all(degrees)
        noncentral = not any(degrees)
        if (contains(spec, kd, z, x) is Membership.TRUE) != central:
            failures.append(f"center: {format_element(x)}")
        if (contains(spec, kd, derived[0], x) is Membership.TRUE) != (noncentral and not mu_is_zero(spec)):
            failures.append(f"derived: {format_element(x)}")
    for _ in range(min(cases, 20)):
        pair = ideal_from_generators(spec, kd, _random_generators(spec, rng, 2))
        members = [sample_member(spec, kd, pair, rng) for _ in range(10)]
        brute = all(not bracket(spec, a, b) for a in members for b in members)
        if brute != is_abelian(spec, kd, pair):
            failures.append("abelian criterion")
    return SuiteResult("structure", cases, failures)


def run_all(spec: GroupSpec, kd: KernelData, seed: int = 0, cases: int = 50, oracle_radius: int = 3) -> list[SuiteResult]:
    results = []
    for i, suite in enumerate((lie_axioms, key_lemma, certificates, ideal_laws, structure)):
        results.append(suite(spec, kd, random.Random(f"{seed}:{i}"), cases))
    oracle_cases = max(1, cases // 10)
    results.append(oracle_differential(spec, kd, random.Random(f"{seed}:oracle"), oracle_cases, oracle_radius))
    return results

