from fractions import Fraction

import pytest

from bctwins import polys
from bctwins.polys import poly


def test_arithmetic_roundtrip():
    f = poly([1, 2, 3])
    g = poly([-1, 1])
    q, r = polys.divmod_poly(polys.mul(f, g), g)
    assert q == f and r == ()
    assert polys.add(f, polys.neg(f)) == ()


def test_gcd_and_inverse():
    f = poly([1, 0, 1])  # x^2 + 1
    g = poly([0, 1])     # x
    assert polys.gcd(f, polys.derivative(f)) == (Fraction(1),)
    inv = polys.invmod(g, f)  # 1/x = -x mod x^2+1
    assert polys.mulmod(inv, g, f) == (Fraction(1),)
    with pytest.raises(ZeroDivisionError):
        polys.invmod(poly([0]), f)


def test_root_isolation_known_roots():
    # (x^2 - 2)(x - 3) has roots -sqrt2, sqrt2, 3
    f = polys.mul(poly([-2, 0, 1]), poly([-3, 1]))
    ivs = polys.isolate_real_roots(f)
    assert len(ivs) == 3
    import math
    roots = [-math.sqrt(2), math.sqrt(2), 3.0]
    for (a, b), r in zip(ivs, roots):
        assert float(a) < r < float(b)


def test_root_isolation_multiplicity_and_complex():
    f = polys.mul(poly([0, 1]), poly([0, 1]))     # x^2: double root at 0
    assert len(polys.isolate_real_roots(f)) == 1
    assert polys.isolate_real_roots(poly([1, 0, 1])) == []


def test_sign_at_root():
    f = poly([-2, 0, 1])
    ivs = polys.isolate_real_roots(f)
    d = poly([0, 1])  # sign of the root itself
    assert polys.sign_at_root(d, f, ivs[0]) == -1
    assert polys.sign_at_root(d, f, ivs[1]) == 1
    # a polynomial that needs refinement: sign of x - 1.4 at sqrt(2)
    g = poly([Fraction(-7, 5), 1])
    assert polys.sign_at_root(g, f, ivs[1]) == 1
    g2 = poly([Fraction(-3, 2), 1])
    assert polys.sign_at_root(g2, f, ivs[1]) == -1


def test_rational_roots():
    f = polys.mul(poly([-1, 2]), poly([3, 1]))  # (2x-1)(x+3)
    assert polys.rational_roots(f) == [Fraction(-3), Fraction(1, 2)]
    assert polys.rational_roots(poly([1, 0, 1])) == []


def test_certify_irreducible():
    assert polys.certify_irreducible(poly([1, 0, 1]))
    assert polys.certify_irreducible(poly([-2, 0, 1]))
    assert polys.certify_irreducible(poly([-2, 0, 0, 1]))
    assert polys.certify_irreducible(poly([5, 1]))
    # reducible: rational root
    assert not polys.certify_irreducible(poly([-4, 0, 1]))
    # reducible without rational roots: (x^2+1)(x^2+4)
    f = polys.mul(poly([1, 0, 1]), poly([4, 0, 1]))
    assert not polys.certify_irreducible(f)
    # irreducible but reducible mod every prime: the probe cannot certify
    assert not polys.certify_irreducible(poly([1, 0, 0, 0, 1]))


def test_interval_eval_contains_range():
    f = poly([1, -3, 2])
    lo, hi = polys.interval_eval(f, Fraction(0), Fraction(2))
    for t in range(0, 21):
        val = polys.evaluate(f, Fraction(t, 10))
        assert lo <= val <= hi
