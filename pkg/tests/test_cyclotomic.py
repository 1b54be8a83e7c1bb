import random
from fractions import Fraction

import pytest

from qhact.cyclotomic import (
    Cyc,
    DivisionByZero,
    InputError,
    cyclotomic_polynomial,
    root_of_unity,
    zeta,
)


def test_root_of_unity_basics():
    assert root_of_unity(1, 0) == 1
    assert root_of_unity(4, 2) == -1
    # zeta_6^2 reduces mod Phi_6 = x^2 - x + 1 to zeta_6 - 1
    z = root_of_unity(6, 2)
    assert z.num == [-1, 1] and z.den == 1


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)
    # prime p: 1 + x + ... + x^(p-1)
    assert cyclotomic_polynomial(7) == (1,) * 7


def test_field_arithmetic_examples():
    w = zeta(3)
    assert w + w**2 == -1
    assert zeta(5, 2) * zeta(5, 3) == 1
    assert zeta(5, 2).inv() == zeta(5, 3)
    two = Cyc.rational(2)
    i = zeta(4)
    assert (two * i - (i + i)).is_zero()
    assert (1 + w + w * w).is_zero()
    assert not zeta(8).is_zero()


def test_rational_values_and_division():
    half = Cyc.rational(Fraction(1, 2), level=5)
    assert (half + half) == 1
    assert (half / half) == 1
    with pytest.raises(DivisionByZero):
        Cyc.zero(3).inv()


def test_mult_order():
    assert root_of_unity(6, 2).mult_order() == 3
    assert Cyc.rational(-1).mult_order() == 2
    assert Cyc.rational(2).mult_order() is None
    assert (zeta(5) + 1).mult_order() is None
    assert Cyc.one().mult_order() == 1


def test_mult_order_grid():
    for L in range(1, 25):
        for k in range(1, L + 1):
            expected = L // __import__("math").gcd(L, k)
            assert root_of_unity(L, k).mult_order() == expected


def test_lift():
    assert zeta(3).lift(6) == zeta(6, 2)
    assert Cyc.one().lift(17) == 1
    assert zeta(5, 2).lift(15) == zeta(15, 6)
    with pytest.raises(InputError):
        zeta(4).lift(6)


def test_lift_is_ring_embedding():
    rng = random.Random(7)
    for _ in range(50):
        L = rng.choice([2, 3, 4, 5, 6])
        M = L * rng.choice([2, 3])
        a = Cyc(L, [rng.randrange(-3, 4) for _ in range(len(zeta(L).num))])
        b = Cyc(L, [rng.randrange(-3, 4) for _ in range(len(zeta(L).num))])
        assert (a * b).lift(M) == a.lift(M) * b.lift(M)
        assert (a + b).lift(M) == a.lift(M) + b.lift(M)


def test_field_axioms_random():
    rng = random.Random(11)
    for _ in range(60):
        L = rng.choice([3, 4, 5, 6, 8, 12])
        deg = len(zeta(L).num)
        a = Cyc(L, [rng.randrange(-4, 5) for _ in range(deg)], rng.randrange(1, 4))
        b = Cyc(L, [rng.randrange(-4, 5) for _ in range(deg)], rng.randrange(1, 4))
        assert a * b == b * a
        if not a.is_zero():
            assert a * a.inv() == 1


def test_pow_and_order_consistency():
    for L in (3, 4, 5, 6, 7, 8, 12):
        for k in range(L):
            a = root_of_unity(L, k)
            n = a.mult_order()
            assert a**n == 1


def test_cross_level_equality():
    assert zeta(6, 2) == zeta(3)
    assert zeta(3) == zeta(6, 2)
    assert zeta(4) != zeta(8)


def test_json_roundtrip():
    a = (zeta(12, 5) + Cyc.rational(Fraction(2, 3), 12)) * zeta(12, 7)
    obj = a.to_json()
    assert obj["level"] == 12
    assert all(isinstance(c, str) for c in obj["coeffs"])
    assert Cyc.from_json(obj) == a
    with pytest.raises(InputError):
        Cyc.from_json({"coeffs": ["1"]})


def test_negative_powers():
    q = zeta(5)
    assert q**-2 == q**3
    assert (q**-1) * q == 1


def test_level_validation():
    with pytest.raises(InputError):
        root_of_unity(0, 1)
    with pytest.raises(InputError):
        cyclotomic_polynomial(-3)
    with pytest.raises(InputError):
        Cyc(6, [1, 2, 3])  # wrong coefficient length for phi(6) = 2
