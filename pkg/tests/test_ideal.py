import random
from fractions import Fraction

import pytest

from hgoldman import (
    AlgebraElement,
    ZERO,
    FiniteIdeals,
    IdealPair,
    InfiniteIdeals,
    InvalidPairError,
    Membership,
    bracket,
    center,
    contains,
    converse_witness_check,
    derived_or_lower_central,
    enumerate_if_finite,
    ideal_from_generators,
    is_abelian,
    kernel_data,
    make_pair,
    pair_equal,
    singleton,
    translate,
    validate_pair,
)
from hgoldman.ideal import (
    EXACT_FINITE_KERNEL,
    LAURENT_RANK_ONE,
    choose_backend,
    sample_member,
    truncated,
    zero_ideal,
)
from hgoldman.sampling import random_element

from conftest import DEG3, SYMPL2, TORS, TRIVIAL, WIDE, ZERO_FORM

TRUE, FALSE, UNKNOWN = Membership.TRUE, Membership.FALSE, Membership.UNKNOWN


def S(*free):
    return singleton(SYMPL2.element(free))


def D(*free):
    return singleton(DEG3.element(free))


@pytest.fixture(scope="module")
def k_sympl2():
    return kernel_data(SYMPL2)


@pytest.fixture(scope="module")
def k_deg3():
    return kernel_data(DEG3)


class TestBackendChoice:
    def test_kinds(self):
        assert choose_backend(SYMPL2, kernel_data(SYMPL2)) == EXACT_FINITE_KERNEL
        assert choose_backend(TORS, kernel_data(TORS)) == EXACT_FINITE_KERNEL
        assert choose_backend(DEG3, kernel_data(DEG3)) == LAURENT_RANK_ONE
        assert choose_backend(WIDE, kernel_data(WIDE), 3) == truncated(3)

    def test_truncated_radius_positive(self):
        with pytest.raises(ValueError):
            truncated(0)


class TestValidate:
    def test_origin_pair(self, k_sympl2):
        assert validate_pair(SYMPL2, k_sympl2, IdealPair((S(0, 0),), ZERO, EXACT_FINITE_KERNEL))

    def test_nonkernel_support(self, k_sympl2):
        with pytest.raises(InvalidPairError):
            validate_pair(SYMPL2, k_sympl2, IdealPair((), (S(1, 0),), EXACT_FINITE_KERNEL))
        with pytest.raises(InvalidPairError):
            make_pair(SYMPL2, k_sympl2, (), [S(1, 0)])

    def test_vanishing_form_forbids_v(self):
        kd = kernel_data(ZERO_FORM)
        unit = singleton(ZERO_FORM.zero())
        with pytest.raises(InvalidPairError):
            validate_pair(ZERO_FORM, kd, IdealPair((), (unit,), EXACT_FINITE_KERNEL))
        with pytest.raises(InvalidPairError):
            make_pair(ZERO_FORM, kd, (), [unit])

    def test_wrong_backend(self, k_deg3):
        with pytest.raises(InvalidPairError):
            validate_pair(DEG3, k_deg3, IdealPair((), ZERO, EXACT_FINITE_KERNEL))

    def test_unreduced_v0(self, k_deg3):
        with pytest.raises(InvalidPairError):
            validate_pair(DEG3, k_deg3, IdealPair((D(0, 0, 0) * 2,), ZERO, LAURENT_RANK_ONE))

    def test_torsion_stability(self):
        kd = kernel_data(TORS)
        zero = TORS.zero()
        with pytest.raises(InvalidPairError):
            validate_pair(TORS, kd, IdealPair((), (singleton(zero),), EXACT_FINITE_KERNEL))
        assert validate_pair(TORS, kd, make_pair(TORS, kd, (), [singleton(zero)]))


class TestFromGenerators:
    def test_nonzero_singleton(self, k_sympl2):
        p = ideal_from_generators(SYMPL2, k_sympl2, [S(1, 0)])
        assert p == IdealPair((), (S(0, 0),), EXACT_FINITE_KERNEL)

    def test_origin(self, k_sympl2):
        assert ideal_from_generators(SYMPL2, k_sympl2, [S(0, 0)]) == IdealPair((S(0, 0),), ZERO, EXACT_FINITE_KERNEL)

    def test_empty(self, k_deg3):
        assert ideal_from_generators(DEG3, k_deg3, []) == zero_ideal(DEG3, k_deg3)

    def test_laurent_generator(self, k_deg3):
        p = ideal_from_generators(DEG3, k_deg3, [D(1, 0, 0) + D(1, 0, 1)])
        assert p.v == (D(0, 0, 0) + D(0, 0, 1),) and p.v0 == ()

    def test_laurent_normalization(self, k_deg3):
        # t^3 (2 + 2t) and (1 - t^2) share 1 + t
        gens = [D(0, 1, 3) * 2 + D(0, 1, 4) * 2, D(1, 1, -1) - D(1, 1, 1)]
        p = ideal_from_generators(DEG3, k_deg3, gens)
        assert p.v == (D(0, 0, 0) + D(0, 0, 1),)

    def test_coprime_laurent_generators_give_full(self, k_deg3):
        p = ideal_from_generators(DEG3, k_deg3, [D(1, 0, 0) + D(1, 0, 1), D(0, 1, 0) - D(0, 1, 1)])
        assert pair_equal(DEG3, k_deg3, p, derived_or_lower_central(DEG3, k_deg3)) is TRUE

    def test_degree_zero_part_goes_to_v0(self, k_deg3):
        p = ideal_from_generators(DEG3, k_deg3, [D(0, 0, 2) * 3 + D(1, 0, 0)])
        assert p.v0 == (D(0, 0, 2),)
        assert p.v == (D(0, 0, 0),)


class TestContains:
    def test_sympl2(self, k_sympl2):
        p = IdealPair((), (S(0, 0),), EXACT_FINITE_KERNEL)
        assert contains(SYMPL2, k_sympl2, p, S(5, 7)) is TRUE
        assert contains(SYMPL2, k_sympl2, p, S(0, 0)) is FALSE
        assert contains(SYMPL2, k_sympl2, p, S(5, 7) + S(0, 0)) is FALSE

    def test_laurent_divisibility(self, k_deg3):
        p = ideal_from_generators(DEG3, k_deg3, [D(1, 0, 0) + D(1, 0, 1)])
        x = DEG3.element((1, 0, 0))
        assert contains(DEG3, k_deg3, p, translate(DEG3, x, D(0, 0, 0) + D(0, 0, 1))) is TRUE
        assert contains(DEG3, k_deg3, p, translate(DEG3, x, D(0, 0, 0))) is FALSE
        assert contains(DEG3, k_deg3, p, D(2, 3, 5) - D(2, 3, 7)) is TRUE

    def test_generators_belong(self, any_spec):
        spec, kd = any_spec
        rng = random.Random(51)
        for _ in range(40):
            gens = [random_element(spec, rng) for _ in range(rng.randint(1, 3))]
            p = ideal_from_generators(spec, kd, gens)
            assert all(contains(spec, kd, p, g) is TRUE for g in gens)

    def test_ideal_property(self, any_spec):
        spec, kd = any_spec
        rng = random.Random(52)
        for _ in range(30):
            p = ideal_from_generators(spec, kd, [random_element(spec, rng) for _ in range(2)])
            x = sample_member(spec, kd, p, rng)
            assert contains(spec, kd, p, x) is TRUE
            assert contains(spec, kd, p, bracket(spec, x, random_element(spec, rng))) is TRUE

    def test_monotone(self, any_spec):
        spec, kd = any_spec
        rng = random.Random(53)
        for _ in range(20):
            g = [random_element(spec, rng) for _ in range(3)]
            small, big = ideal_from_generators(spec, kd, g[:1]), ideal_from_generators(spec, kd, g)
            for _ in range(5):
                x = sample_member(spec, kd, small, rng)
                assert contains(spec, kd, big, x) is TRUE


class TestEquality:
    def test_presentations(self, k_sympl2):
        p = ideal_from_generators(SYMPL2, k_sympl2, [S(1, 0)])
        q = ideal_from_generators(SYMPL2, k_sympl2, [S(0, 1), S(2, 3)])
        assert pair_equal(SYMPL2, k_sympl2, p, q) is TRUE
        assert pair_equal(SYMPL2, k_sympl2, p, derived_or_lower_central(SYMPL2, k_sympl2)) is TRUE

    def test_distinct(self, k_sympl2):
        a = IdealPair((), ZERO, EXACT_FINITE_KERNEL)
        b = IdealPair((), (S(0, 0),), EXACT_FINITE_KERNEL)
        assert pair_equal(SYMPL2, k_sympl2, a, b) is FALSE
        assert pair_equal(SYMPL2, k_sympl2, b, b) is TRUE

    def test_full_v0_on_finite_kernel(self, k_sympl2):
        assert pair_equal(SYMPL2, k_sympl2, center(SYMPL2, k_sympl2), make_pair(SYMPL2, k_sympl2, [S(0, 0)])) is TRUE

    def test_extra_bracket(self, any_spec):
        spec, kd = any_spec
        rng = random.Random(54)
        for _ in range(20):
            gens = [random_element(spec, rng) for _ in range(2)]
            y = singleton(random_element(spec, rng).support[0])
            extra = gens + [bracket(spec, gens[0], y)]
            p, q = ideal_from_generators(spec, kd, gens), ideal_from_generators(spec, kd, extra)
            assert pair_equal(spec, kd, p, q) is TRUE


class TestStructure:
    def test_center(self, k_sympl2, k_deg3):
        c = center(SYMPL2, k_sympl2)
        assert is_abelian(SYMPL2, k_sympl2, c)
        assert contains(SYMPL2, k_sympl2, c, S(0, 0)) is TRUE
        assert contains(SYMPL2, k_sympl2, c, S(1, 0)) is FALSE
        assert contains(DEG3, k_deg3, center(DEG3, k_deg3), D(0, 0, 5)) is TRUE

    def test_center_of_abelian_algebra(self):
        kd = kernel_data(ZERO_FORM)
        x = singleton(ZERO_FORM.element(None, (1,))) + singleton(ZERO_FORM.zero())
        assert contains(ZERO_FORM, kd, center(ZERO_FORM, kd), x) is TRUE

    def test_series_constant(self, k_sympl2):
        first = derived_or_lower_central(SYMPL2, k_sympl2, 1)
        assert not is_abelian(SYMPL2, k_sympl2, first)
        for m in range(2, 6):
            assert pair_equal(SYMPL2, k_sympl2, first, derived_or_lower_central(SYMPL2, k_sympl2, m)) is TRUE
        with pytest.raises(ValueError):
            derived_or_lower_central(SYMPL2, k_sympl2, 0)

    def test_series_of_abelian_algebra(self):
        kd = kernel_data(ZERO_FORM)
        assert derived_or_lower_central(ZERO_FORM, kd) == zero_ideal(ZERO_FORM, kd)

    def test_abelian_iff_v_zero(self, any_spec):
        spec, kd = any_spec
        rng = random.Random(55)
        for _ in range(20):
            p = ideal_from_generators(spec, kd, [random_element(spec, rng)])
            vanish = all(
                not bracket(spec, sample_member(spec, kd, p, rng), sample_member(spec, kd, p, rng)) for _ in range(20)
            )
            if is_abelian(spec, kd, p):
                assert vanish
            else:
                assert not vanish


class TestEnumerate:
    def test_sympl2(self, k_sympl2):
        result = enumerate_if_finite(SYMPL2, k_sympl2)
        assert isinstance(result, FiniteIdeals) and len(result) == 4
        for i, p in enumerate(result.pairs):
            assert validate_pair(SYMPL2, k_sympl2, p)
            for q in result.pairs[i + 1 :]:
                assert pair_equal(SYMPL2, k_sympl2, p, q) is FALSE

    def test_trivial_group(self):
        assert len(enumerate_if_finite(TRIVIAL, kernel_data(TRIVIAL))) == 2

    @pytest.mark.parametrize("spec", [DEG3, TORS, ZERO_FORM], ids=["deg3", "tors", "zero_form"])
    def test_infinite_family(self, spec):
        kd = kernel_data(spec)
        result = enumerate_if_finite(spec, kd)
        assert isinstance(result, InfiniteIdeals)
        members = [result.member(Fraction(c, 2)) for c in range(-3, 4)]
        for i, p in enumerate(members):
            assert validate_pair(spec, kd, p)
            for q in members[i + 1 :]:
                assert pair_equal(spec, kd, p, q) is FALSE

    def test_describe(self, k_deg3):
        text = enumerate_if_finite(DEG3, k_deg3).describe()
        assert text == "V0 = span{1*[0,0,0] + c*[0,0,1]}, V = ZERO, c in Q"


class TestConverse:
    def test_valid_pairs_pass(self, any_spec):
        spec, kd = any_spec
        rng = random.Random(56)
        for _ in range(5):
            p = ideal_from_generators(spec, kd, [random_element(spec, rng)])
            assert converse_witness_check(spec, kd, p, samples=40, seed=rng.randrange(1000)) is True

    def test_sympl2_derived(self, k_sympl2):
        p = ideal_from_generators(SYMPL2, k_sympl2, [S(1, 0)])
        assert converse_witness_check(SYMPL2, k_sympl2, p, samples=100) is True

    def test_zero_ideal_vacuous(self, k_sympl2):
        assert converse_witness_check(SYMPL2, k_sympl2, zero_ideal(SYMPL2, k_sympl2)) is True

    def test_unstable_v_yields_counterexample(self):
        kd = kernel_data(TORS)
        bad = IdealPair((), (singleton(TORS.zero()),), EXACT_FINITE_KERNEL)
        result = converse_witness_check(TORS, kd, bad, samples=100)
        assert result is not True
        v, x, y = result
        z = bracket(TORS, translate(TORS, x, v), singleton(y))
        assert contains(TORS, kd, bad, z) is not TRUE


@pytest.fixture(scope="module")
def kd():
    return kernel_data(WIDE)


class TestTruncated:
    def test_rank(self, kd):
        assert kd.kernel_rank == 2

    def test_generator_and_translates(self, kd):
        g = singleton(WIDE.element((1, 0, 0, 0))) + singleton(WIDE.element((1, 0, 1, 0)))
        p = ideal_from_generators(WIDE, kd, [g], radius=2)
        assert p.backend == truncated(2)
        assert contains(WIDE, kd, p, g) is TRUE
        shifted = translate(WIDE, WIDE.element((0, 3, 0, 2), (1,)), g) * 5
        assert contains(WIDE, kd, p, shifted) is TRUE

    def test_sign_character_refutes(self, kd):
        # 1 + t1 vanishes under t1 -> -1 while 1 does not
        g = singleton(WIDE.element((1, 0, 0, 0))) + singleton(WIDE.element((1, 0, 1, 0)))
        p = ideal_from_generators(WIDE, kd, [g], radius=2)
        assert contains(WIDE, kd, p, singleton(WIDE.element((1, 0, 0, 0)))) is FALSE

    def test_unknown_when_inconclusive(self, kd):
        # 1 + t1 + t1^2 is a non-unit that no sign character kills
        g = sum((singleton(WIDE.element((1, 0, n, 0))) for n in range(3)), AlgebraElement())
        p = ideal_from_generators(WIDE, kd, [g], radius=2)
        assert contains(WIDE, kd, p, singleton(WIDE.element((1, 0, 0, 0)))) is UNKNOWN

    def test_never_false_on_members(self, kd):
        rng = random.Random(57)
        for _ in range(10):
            p = ideal_from_generators(WIDE, kd, [random_element(WIDE, rng)], radius=2)
            x = sample_member(WIDE, kd, p, rng)
            assert contains(WIDE, kd, p, x) is not FALSE


class TestValidateNormalization:
    def test_laurent_needs_single_generator(self, k_deg3):
        bad = IdealPair((), (D(0, 0, 0), D(0, 0, 1)), LAURENT_RANK_ONE)
        with pytest.raises(InvalidPairError):
            validate_pair(DEG3, k_deg3, bad)

    def test_laurent_needs_monic_shifted(self, k_deg3):
        for v in (D(0, 0, 0) * 2 + D(0, 0, 1) * 2, D(0, 0, 1) + D(0, 0, 2)):
            with pytest.raises(InvalidPairError):
                validate_pair(DEG3, k_deg3, IdealPair((), (v,), LAURENT_RANK_ONE))

    def test_exact_v_must_be_reduced(self, k_sympl2):
        with pytest.raises(InvalidPairError):
            validate_pair(SYMPL2, k_sympl2, IdealPair((), (S(0, 0) * 3,), EXACT_FINITE_KERNEL))
