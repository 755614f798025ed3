"""Exact arithmetic over Q and its completions: factorization, square
classes, Legendre and Hilbert symbols, p-adic valuations.

All inputs are exact (int or fractions.Fraction); no floating point.
The Hilbert symbol at p = 2 uses the closed formula in terms of
valuations and units mod 8; the test suite cross-validates it against a
search-and-Hensel oracle.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Union

Rational = Union[int, Fraction]

_TRIAL_BOUND = 10**6


class SymbolError(ValueError):
    """Invalid input to a local-symbol computation."""


# ---------------------------------------------------------------------------
# Places
# ---------------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class Place:
    """A place of Q: the real place (p = 0 by convention) or a finite prime.

    Ordering puts the real place first, then primes ascending, which is the
    canonical certificate order used throughout.
    """

    p: int  # 0 for the real place, else a prime >= 2

    def __post_init__(self):
        if self.p == 0:
            return
        if self.p < 2 or not is_prime(self.p):
            raise SymbolError(f"not a prime: {self.p}")

    @property
    def is_real(self) -> bool:
        return self.p == 0

    @property
    def is_finite(self) -> bool:
        return self.p != 0

    def __str__(self) -> str:
        return "inf" if self.p == 0 else str(self.p)

    @staticmethod
    def real() -> "Place":
        return Place(0)

    @staticmethod
    def finite(p: int) -> "Place":
        return Place(p)

    @staticmethod
    def parse(s: str) -> "Place":
        s = s.strip()
        if s in ("inf", "oo", "infty", "real"):
            return Place.real()
        return Place(int(s))


REAL_PLACE = Place(0)


# ---------------------------------------------------------------------------
# Integer factorization: trial division up to 10^6, then Pollard rho.
# Inputs here are user-supplied desk-scale data; no subexponential methods.
# ---------------------------------------------------------------------------

def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for 64-bit-ish inputs, probabilistic above."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    # these witnesses are deterministic for n < 3.3 * 10^24
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int, rng: random.Random) -> int:
    """A nontrivial factor of composite odd n."""
    while True:
        c = rng.randrange(1, n)
        x = y = rng.randrange(2, n)
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d


def factor(n: int) -> dict[int, int]:
    """Prime factorization of a nonzero integer as {prime: exponent}.

    The sign is discarded; factor(1) == factor(-1) == {}.
    """
    if n == 0:
        raise SymbolError("cannot factor 0")
    n = abs(n)
    out: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    d = 7
    wheel = (4, 2, 4, 2, 4, 6, 2, 6)
    i = 0
    while d * d <= n and d < _TRIAL_BOUND:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += wheel[i]
        i = (i + 1) % 8
    if n > 1:
        if d * d > n:
            out[n] = out.get(n, 0) + 1
        else:
            _factor_hard(n, out, random.Random(0xBC))
    return out


def _factor_hard(n: int, out: dict[int, int], rng: random.Random) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    d = _pollard_rho(n, rng)
    _factor_hard(d, out, rng)
    _factor_hard(n // d, out, rng)


def factorization_of(x: Rational) -> dict[int, int]:
    """Factorization of a nonzero rational, with signed exponents."""
    x = Fraction(x)
    if x == 0:
        raise SymbolError("cannot factor 0")
    out = dict(factor(x.numerator))
    for p, e in factor(x.denominator).items():
        out[p] = out.get(p, 0) - e
    return {p: e for p, e in out.items() if e != 0}


# ---------------------------------------------------------------------------
# Square classes
# ---------------------------------------------------------------------------

def square_class(x: Rational) -> int:
    """Canonical representative of x in Q^x / (Q^x)^2: the squarefree
    integer (sign carried) with x / result a rational square."""
    x = Fraction(x)
    if x == 0:
        raise SymbolError("square class of 0 is undefined")
    rep = -1 if x < 0 else 1
    for p, e in factorization_of(x).items():
        if e % 2:
            rep *= p
    return rep


def is_square(x: Rational) -> bool:
    x = Fraction(x)
    return x > 0 and square_class(x) == 1


def valuation(x: Rational, p: int) -> int:
    """p-adic valuation of a nonzero rational."""
    x = Fraction(x)
    if x == 0:
        raise SymbolError("valuation of 0 is undefined")
    v = 0
    n = x.numerator
    while n % p == 0:
        n //= p
        v += 1
    d = x.denominator
    while d % p == 0:
        d //= p
        v -= 1
    return v


def _unit_times(x: Fraction, p: int) -> int:
    """num * den of the p-free part of x; equivalent to the unit part of x
    modulo squares at p (den^2 is a square)."""
    n, d = x.numerator, x.denominator
    while n % p == 0:
        n //= p
    while d % p == 0:
        d //= p
    return n * d


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) for an odd prime p: +1, -1 or 0."""
    if p == 2 or not is_prime(p):
        raise SymbolError(f"legendre symbol needs an odd prime, got {p}")
    a %= p
    if a == 0:
        return 0
    t = pow(a, (p - 1) // 2, p)
    return 1 if t == 1 else -1


def is_square_at(x: Rational, v: Place) -> bool:
    """Whether x is a square in the completion of Q at v."""
    x = Fraction(x)
    if x == 0:
        raise SymbolError("square test of 0 is undefined")
    if v.is_real:
        return x > 0
    p = v.p
    if valuation(x, p) % 2:
        return False
    u = _unit_times(x, p)
    if p == 2:
        return u % 8 == 1
    return legendre(u, p) == 1


# ---------------------------------------------------------------------------
# Hilbert symbol
# ---------------------------------------------------------------------------

def _eps2(u: int) -> int:
    # (u - 1)/2 mod 2 for odd u
    return ((u - 1) // 2) % 2


def _omega2(u: int) -> int:
    # (u^2 - 1)/8 mod 2 for odd u
    return ((u * u - 1) // 8) % 2


def hilbert(a: Rational, b: Rational, v: Place) -> int:
    """Hilbert symbol (a, b)_v: +1 iff z^2 = a x^2 + b y^2 has a nontrivial
    solution over the completion of Q at v."""
    a, b = Fraction(a), Fraction(b)
    if a == 0 or b == 0:
        raise SymbolError("hilbert symbol needs nonzero arguments")
    if v.is_real:
        return -1 if (a < 0 and b < 0) else 1
    p = v.p
    alpha, beta = valuation(a, p), valuation(b, p)
    u, w = _unit_times(a, p), _unit_times(b, p)
    if p == 2:
        e = _eps2(u) * _eps2(w) + alpha * _omega2(w) + beta * _omega2(u)
        return -1 if e % 2 else 1
    s = 1
    if (alpha * beta) % 2 and (p - 1) // 2 % 2:
        s = -s
    if beta % 2:
        s *= legendre(u % p, p)
    if alpha % 2:
        s *= legendre(w % p, p)
    return s


def support_places(values: Iterable[Rational]) -> list[Place]:
    """The canonical support set {inf, 2} plus primes dividing the numerator
    or denominator of any of the given nonzero rationals, in place order."""
    primes = {2}
    for x in values:
        x = Fraction(x)
        if x == 0:
            raise SymbolError("support of 0 is undefined")
        primes.update(factor(x.numerator))
        primes.update(factor(x.denominator))
    return [REAL_PLACE] + [Place(p) for p in sorted(primes)]


@lru_cache(maxsize=None)
def _nth_prime_after(n: int) -> int:
    k = max(n, 2)
    while not is_prime(k):
        k += 1
    return k


def hilbert_product_check(a: Rational, b: Rational, extra_primes: int = 3,
                          rng: random.Random | None = None) -> bool:
    """Product-formula check: the product of (a,b)_v over the support set is
    +1, and the symbol is +1 at `extra_primes` random off-support primes."""
    support = support_places([a, b])
    prod = 1
    for v in support:
        prod *= hilbert(a, b, v)
    if prod != 1:
        return False
    rng = rng or random.Random(0)
    in_support = {v.p for v in support}
    found = 0
    while found < extra_primes:
        q = _nth_prime_after(rng.randrange(3, 10**4))
        if q in in_support:
            continue
        if hilbert(a, b, Place(q)) != 1:
            return False
        found += 1
    return True
