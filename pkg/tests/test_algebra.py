import random
from fractions import Fraction

import pytest

from hgoldman import (
    AdWord,
    AlgebraElement,
    SpecError,
    ad_apply,
    bracket,
    decompose,
    kernel_data,
    lift,
    pairing,
    singleton,
    translate,
)
from hgoldman.algebra import add, coset_of, scale
from hgoldman.sampling import random_element, random_homogeneous, random_kernel_element, random_nonkernel

from conftest import DEG3, SYMPL2


def S(*free):
    return singleton(SYMPL2.element(free))


def D(*free):
    return singleton(DEG3.element(free))


class TestLinear:
    def test_cancellation(self):
        x = SYMPL2.element((1, 0))
        assert not add(singleton(x) * 2, singleton(x) * -2)
        assert len(add(singleton(x) * 2, singleton(x) * -2)) == 0

    def test_scale_zero(self):
        assert scale(0, S(1, 0) + S(0, 1)) == AlgebraElement()

    def test_distinct_support(self):
        assert len(add(S(1, 0), S(0, 1))) == 2

    def test_coefficients_are_fractions(self):
        x = AlgebraElement({SYMPL2.element((1, 0)): Fraction(3, 6)})
        assert x.coefficient(SYMPL2.element((1, 0))) == Fraction(1, 2)

    def test_equality_and_hash(self):
        a = S(1, 0) * Fraction(1, 2) + S(0, 1)
        b = S(0, 1) + S(1, 0) * Fraction(2, 4)
        assert a == b and hash(a) == hash(b)


class TestBracket:
    def test_basis_bracket(self):
        assert bracket(SYMPL2, S(1, 0), S(0, 1)) == S(1, 1)

    def test_alternating(self):
        assert not bracket(SYMPL2, S(1, 0), S(1, 0))

    def test_bilinear_expansion(self):
        # 2<e1,e1>[2e1] + <e2,e1>[e1+e2] = -[1,1]
        assert bracket(SYMPL2, S(1, 0) * 2 + S(0, 1), S(1, 0)) == -S(1, 1)

    def test_spec_mismatch(self):
        with pytest.raises(SpecError):
            bracket(SYMPL2, S(1, 0), D(1, 0, 0))


class TestTranslate:
    def test_shift(self):
        assert translate(SYMPL2, SYMPL2.element((1, 0)), S(0, 1)) == S(1, 1)

    def test_zero_shift(self):
        y = S(1, 2) * 3 - S(0, 1)
        assert translate(SYMPL2, SYMPL2.zero(), y) == y

    def test_linear_and_invertible(self):
        rng = random.Random(3)
        for _ in range(50):
            x = SYMPL2.element((rng.randint(-5, 5), rng.randint(-5, 5)))
            y, z = random_element(SYMPL2, rng), random_element(SYMPL2, rng)
            a, b = Fraction(rng.randint(-4, 4), 3), Fraction(rng.randint(-4, 4), 5)
            assert translate(SYMPL2, x, y * a + z * b) == translate(SYMPL2, x, y) * a + translate(SYMPL2, x, z) * b
            assert translate(SYMPL2, -x, translate(SYMPL2, x, y)) == y


class TestAdApply:
    def test_homogeneous_identity(self):
        y = D(0, 1, 0) + D(0, 1, 4)
        word = AdWord([DEG3.element((1, 0, 0))])
        assert ad_apply(DEG3, word, y) == D(1, 1, 0) + D(1, 1, 4)

    def test_empty_word(self):
        x = D(1, 2, 3) * 5
        assert ad_apply(DEG3, AdWord(), x) == x

    def test_self_word(self):
        assert not ad_apply(DEG3, AdWord([DEG3.element((1, 2, 0))]), D(1, 2, 0))

    def test_rightmost_acts_first(self):
        a, b = SYMPL2.element((1, 0)), SYMPL2.element((0, 1))
        x = S(1, 1)
        expected = bracket(SYMPL2, singleton(a), bracket(SYMPL2, singleton(b), x))
        assert ad_apply(SYMPL2, AdWord([a, b]), x) == expected

    def test_then_concatenates(self):
        a, b = SYMPL2.element((1, 0)), SYMPL2.element((0, 1))
        assert AdWord([a]).then(AdWord([b])) == AdWord([b, a])


class TestDecompose:
    def test_grouping(self):
        kd = kernel_data(DEG3)
        x = D(1, 0, 0) + D(1, 0, 2) + D(0, 1, 0) + D(0, 0, 3)
        assert decompose(DEG3, kd, x) == {
            (0, 0): D(0, 0, 3),
            (0, 1): D(0, 1, 0),
            (1, 0): D(1, 0, 0) + D(1, 0, 2),
        }

    def test_homogeneous(self):
        kd = kernel_data(DEG3)
        x = D(1, 0, 0) - D(1, 0, 5)
        assert decompose(DEG3, kd, x) == {(1, 0): x}
        assert coset_of(DEG3, kd, x) == (1, 0)

    def test_zero(self):
        assert decompose(DEG3, kernel_data(DEG3), AlgebraElement()) == {}


def test_lie_axioms(any_spec):
    spec, kd = any_spec
    rng = random.Random(11)
    for _ in range(100):
        x, y, z = (random_element(spec, rng) for _ in range(3))
        assert bracket(spec, x, y) == -bracket(spec, y, x)
        jacobi = bracket(spec, x, bracket(spec, y, z)) + bracket(spec, y, bracket(spec, z, x)) + bracket(
            spec, z, bracket(spec, x, y)
        )
        assert not jacobi


def test_grading(any_spec):
    spec, kd = any_spec
    rng = random.Random(12)
    for _ in range(100):
        x, y = random_element(spec, rng), random_element(spec, rng)
        allowed = {tuple(a + b for a, b in zip(c, d)) for c in decompose(spec, kd, x) for d in decompose(spec, kd, y)}
        assert set(decompose(spec, kd, bracket(spec, x, y))) <= allowed


def test_decompose_round_trip(any_spec):
    spec, kd = any_spec
    rng = random.Random(13)
    for _ in range(100):
        x = random_element(spec, rng, max_terms=6)
        parts = decompose(spec, kd, x)
        assert sum(parts.values(), AlgebraElement()) == x
        for c, part in parts.items():
            assert part and coset_of(spec, kd, part) == c


def test_homogeneous_ad_identity(any_spec):
    spec, kd = any_spec
    rng = random.Random(14)
    for _ in range(100):
        x = random_nonkernel(spec, kd, rng)
        y = random_homogeneous(spec, kd, rng, random_nonkernel(spec, kd, rng))
        c = coset_of(spec, kd, y)
        p = pairing(spec, x, lift(spec, kd, c))
        assert all(pairing(spec, x, g) == p for g in y.support)
        assert bracket(spec, singleton(x), y) == translate(spec, x, y) * p


def test_kernel_elements_are_central(any_spec):
    spec, kd = any_spec
    rng = random.Random(15)
    for _ in range(100):
        k = AlgebraElement({random_kernel_element(spec, kd, rng): 1, random_kernel_element(spec, kd, rng): -3})
        assert not bracket(spec, k, random_element(spec, rng))
