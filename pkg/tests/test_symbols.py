import random
from fractions import Fraction

import pytest

from bctwins.symbols import (
    Place,
    REAL_PLACE,
    SymbolError,
    factor,
    hilbert,
    hilbert_product_check,
    is_square_at,
    legendre,
    square_class,
    support_places,
)
from oracles import hilbert_oracle, legendre_oracle, trial_factor


def test_factor_examples():
    assert factor(1) == {}
    assert factor(-1) == {}
    assert factor(12) == {2: 2, 3: 1}
    assert factor(9991) == trial_factor(9991) == {97: 1, 103: 1}
    with pytest.raises(SymbolError):
        factor(0)


def test_factor_matches_trial_division():
    rng = random.Random(1)
    for _ in range(200):
        n = rng.randint(2, 10 ** 7)
        assert factor(n) == trial_factor(n)


def test_factor_large_semiprime_uses_rho():
    p, q = 1000003, 1000033
    assert factor(p * q) == {p: 1, q: 1}


def test_square_class_examples():
    assert square_class(4) == 1
    assert square_class(Fraction(-18, 25)) == -2
    assert square_class(Fraction(7, 3)) == 21
    with pytest.raises(SymbolError):
        square_class(0)


def test_square_class_constant_on_square_multiples():
    rng = random.Random(2)
    for _ in range(100):
        x = Fraction(rng.randint(-50, 50) or 3, rng.randint(1, 50))
        t = Fraction(rng.randint(1, 30), rng.randint(1, 30))
        assert square_class(x) == square_class(x * t * t)


def test_legendre_examples_and_oracle():
    assert legendre(2, 7) == 1
    assert legendre(1, 13) == 1
    assert legendre(3, 7) == -1
    for p in (3, 5, 7, 11, 13):
        for a in range(-6, 15):
            assert legendre(a, p) == legendre_oracle(a, p)
    with pytest.raises(SymbolError):
        legendre(2, 4)
    with pytest.raises(SymbolError):
        legendre(2, 2)


def test_hilbert_examples():
    assert hilbert(1, 5, Place(2)) == 1
    assert hilbert(1, -7, REAL_PLACE) == 1
    assert hilbert(-1, -1, REAL_PLACE) == -1
    assert hilbert(-1, -1, Place(2)) == -1
    assert hilbert(-1, -1, Place(7)) == 1


def test_hilbert_against_search_oracle():
    rng = random.Random(3)
    for _ in range(150):
        a = Fraction(rng.randint(-30, 30) or 1, rng.randint(1, 30))
        b = Fraction(rng.randint(-30, 30) or 1, rng.randint(1, 30))
        for v in support_places([a, b]):
            expected = hilbert_oracle(a, b, "inf" if v.is_real else v.p)
            assert hilbert(a, b, v) == expected


def test_hilbert_bimultiplicative_and_symmetric():
    rng = random.Random(4)
    for _ in range(60):
        a = Fraction(rng.randint(-20, 20) or 2, rng.randint(1, 20))
        a2 = Fraction(rng.randint(-20, 20) or 3, rng.randint(1, 20))
        b = Fraction(rng.randint(-20, 20) or 5, rng.randint(1, 20))
        for v in support_places([a, a2, b]):
            assert hilbert(a * a2, b, v) == hilbert(a, b, v) * hilbert(a2, b, v)
            assert hilbert(a, b, v) == hilbert(b, a, v)


def test_hilbert_steinberg_relations():
    rng = random.Random(5)
    for _ in range(60):
        a = Fraction(rng.randint(-20, 20) or 2, rng.randint(1, 20))
        if a in (0, 1):
            continue
        for v in support_places([a, 1 - a]):
            assert hilbert(a, -a, v) == 1
            assert hilbert(a, 1 - a, v) == 1


def test_product_formula():
    rng = random.Random(6)
    for _ in range(60):
        a = Fraction(rng.randint(-30, 30) or 7, rng.randint(1, 30))
        b = Fraction(rng.randint(-30, 30) or 11, rng.randint(1, 30))
        assert hilbert_product_check(a, b, rng=random.Random(_))


def test_place_parsing_and_order():
    assert Place.parse("inf").is_real
    assert Place.parse("17") == Place(17)
    with pytest.raises(SymbolError):
        Place.parse("15")
    ps = support_places([Fraction(6), Fraction(35)])
    assert ps[0].is_real and [v.p for v in ps[1:]] == [2, 3, 5, 7]


def test_is_square_at():
    assert is_square_at(Fraction(2), REAL_PLACE)
    assert not is_square_at(Fraction(-2), REAL_PLACE)
    assert is_square_at(Fraction(17), Place(2))  # 17 = 1 mod 8
    assert not is_square_at(Fraction(3), Place(2))
    assert is_square_at(Fraction(4), Place(7))
    assert not is_square_at(Fraction(7), Place(7))
