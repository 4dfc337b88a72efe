"""Tests for equal-degree splitting and the root-of-unity tower."""

import random

import pytest

from padicfft.errors import (
    BadInput,
    DegreeTooSmall,
    EvenCharacteristic,
    NotCoprime,
    RandomnessFailure,
)
from padicfft.ffield import (
    ExtensionField,
    PrimeField,
    is_irreducible,
    poly_divmod,
    poly_eval,
    poly_from_ints,
    poly_mul,
)
from padicfft.orders import cyclotomic_polynomial, factorize, multiplicative_order
from padicfft.tower import build_root_of_unity, cz_split

F19 = PrimeField(19)
F3 = PrimeField(3)
PHI5_19 = poly_from_ints(F19, cyclotomic_polynomial(5))


def test_phi5_splits_into_the_two_known_quadratics():
    # oracle: the two candidates multiply back to Phi_5 mod 19
    a = poly_from_ints(F19, (1, 5, 1))
    b = poly_from_ints(F19, (1, 15, 1))
    assert poly_mul(F19, a, b) == PHI5_19

    seen = set()
    for seed in range(100):
        fac = cz_split(F19, PHI5_19, 2, random.Random(seed))
        seen.add(tuple(fac))
    assert seen == {(1, 5, 1), (1, 15, 1)}


def test_cz_split_factor_divides_input():
    for seed in range(10):
        fac = cz_split(F19, PHI5_19, 2, random.Random(seed))
        _, rem = poly_divmod(F19, PHI5_19, fac)
        assert rem == []
        assert is_irreducible(F19, fac)


def test_cz_split_returns_input_when_degree_matches():
    class Tripwire(random.Random):
        def random(self):
            raise AssertionError("randomness must not be consumed")

        def getrandbits(self, k):
            raise AssertionError("randomness must not be consumed")

    assert cz_split(F3, [1, 0, 1], 2, Tripwire()) == [1, 0, 1]
    # non-monic input comes back monic
    assert cz_split(F3, [2, 0, 2], 2, Tripwire()) == [1, 0, 1]


def test_cz_split_input_validation():
    rng = random.Random(0)
    with pytest.raises(EvenCharacteristic):
        cz_split(PrimeField(2), [1, 1, 1], 1, rng)
    with pytest.raises(BadInput):
        cz_split(F19, PHI5_19, 3, rng)  # 3 does not divide 4
    with pytest.raises(DegreeTooSmall):
        cz_split(F19, [5], 1, rng)


def test_cz_split_gives_up_on_wrong_degree_promise():
    # X^2 + 1 is irreducible over F_3, so no linear factor ever appears
    with pytest.raises(RandomnessFailure):
        cz_split(F3, [1, 0, 1], 1, random.Random(7))


def test_build_root_validation():
    rng = random.Random(0)
    with pytest.raises(NotCoprime):
        build_root_of_unity(3, 9, rng)
    with pytest.raises(EvenCharacteristic):
        build_root_of_unity(2, 5, rng)
    with pytest.raises(BadInput):
        build_root_of_unity(3, 1, rng)


def test_build_root_s2():
    root = build_root_of_unity(3, 2, random.Random(0))
    assert root.modulus == (1, 1)
    assert root.zeta == (2,)
    assert root.degree == 1


def test_build_root_p3_s4_is_quadratic_i():
    root = build_root_of_unity(3, 4, random.Random(0))
    assert root.modulus == (1, 0, 1)
    assert root.zeta == (0, 1)
    f = root.field
    assert f.pow(root.zeta, 2) == f.neg(f.one())


def test_build_root_p19_s5_hits_both_factors():
    seen = set()
    for seed in range(40):
        root = build_root_of_unity(19, 5, random.Random(seed))
        assert root.degree == 2
        seen.add(root.modulus)
        f = root.field
        assert f.pow(root.zeta, 5) == f.one()
        assert f.pow(root.zeta, 1) != f.one()
    assert seen == {(1, 5, 1), (1, 15, 1)}


def _check_primitive(root):
    f = root.field
    assert f.pow(root.zeta, root.s) == f.one()
    for q, _ in factorize(root.s):
        assert f.pow(root.zeta, root.s // q) != f.one()


def test_build_root_p3_s104():
    root = build_root_of_unity(3, 104, random.Random(1))
    assert root.degree == multiplicative_order(3, 104) == 6
    assert is_irreducible(F3, list(root.modulus))
    _check_primitive(root)
    # the modulus divides Y^s - 1 over F_p
    ys1 = [F3.neg(F3.one())] + [F3.zero()] * 103 + [F3.one()]
    _, rem = poly_divmod(F3, ys1, poly_from_ints(F3, root.modulus))
    assert rem == []


def test_build_root_multi_prime_rebase():
    root = build_root_of_unity(3, 40, random.Random(5))
    assert root.degree == multiplicative_order(3, 40) == 4
    _check_primitive(root)

    root = build_root_of_unity(19, 40, random.Random(5))
    assert root.degree == multiplicative_order(19, 40) == 2
    _check_primitive(root)


def test_build_root_anomalous_two_power():
    # ord_8(19) = ord_4(19), so the 2-power ladder cannot use one binomial
    root = build_root_of_unity(19, 8, random.Random(3))
    assert root.degree == 2
    f = root.field
    assert f.pow(root.zeta, 4) == f.neg(f.one())
    _check_primitive(root)


def test_build_root_deterministic_per_seed():
    a = build_root_of_unity(3, 104, random.Random(42))
    b = build_root_of_unity(3, 104, random.Random(42))
    assert a.modulus == b.modulus
    assert a.zeta == b.zeta


def test_build_root_counts_base_multiplications():
    root = build_root_of_unity(3, 104, random.Random(0))
    assert 0 < root.base_counter.count < 10**7


def test_build_root_zeta_conjugates_are_roots_of_modulus():
    root = build_root_of_unity(19, 5, random.Random(2))
    f = root.field
    mod = poly_from_ints(f, root.modulus)
    conj = root.zeta
    for _ in range(root.degree):
        assert poly_eval(f, mod, conj) == f.zero()
        conj = f.pow(conj, 19)
