"""Random generators shared by the property and acceptance tests."""

from __future__ import annotations

import random
from fractions import Fraction

from bctwins.etale import EtaleInvolutionAlgebra
from bctwins.qforms import DiagForm

# certified-irreducible monic polynomials (ascending coefficients)
FIELD_POOL: list[list[int]] = [
    [0, 1],            # Q
    [-2, 0, 1],        # Q(sqrt 2)
    [1, 0, 1],         # Q(i)
    [-3, 0, 1],        # Q(sqrt 3)
    [3, 0, 1],         # Q(sqrt -3)
    [1, 1, 1],         # Q(zeta_3)
    [-1, -1, 1],       # Q(golden ratio)
    [-2, 0, 0, 1],     # Q(cbrt 2)
    [-1, 1, 0, 1],     # x^3 + x - 1
]


def random_form(rng: random.Random, dim: int, height: int = 20) -> DiagForm:
    entries = []
    while len(entries) < dim:
        num = rng.randint(-height, height)
        if num == 0:
            continue
        entries.append(Fraction(num, rng.randint(1, height)))
    return DiagForm(tuple(entries))


def random_algebra(rng: random.Random, max_dim: int = 13,
                   parity: int | None = None) -> EtaleInvolutionAlgebra:
    """A random valid algebra in normal form with total dimension <= max_dim
    and the requested parity (None: whatever comes out)."""
    factors = []
    dim = 0
    want_odd = rng.random() < 0.5 if parity is None else bool(parity % 2)
    budget = max_dim - (1 if want_odd else 0)
    while True:
        pool = [f for f in FIELD_POOL if 2 * (len(f) - 1) <= budget - dim]
        if not pool or (factors and rng.random() < 0.35):
            break
        poly = rng.choice(pool)
        deg = len(poly) - 1
        while True:
            d = [rng.randint(-4, 4) for _ in range(deg)]
            if any(d):
                break
        factors.append((poly, d))
        dim += 2 * deg
    if not factors:
        poly = [0, 1]
        factors.append((poly, [rng.choice([-3, -2, -1, 2, 3, 5])]))
        dim += 2
    return EtaleInvolutionAlgebra.create(factors, fixed=1 if want_odd else 0)


def random_split_form_odd(rng: random.Random, rank: int) -> DiagForm:
    """A form of global Witt index `rank` in dimension 2*rank + 1, presented
    with scrambled hyperbolic planes."""
    entries: list[Fraction] = []
    for _ in range(rank):
        s = Fraction(rng.choice([1, 2, 3, 5, 6, 7, 10]))
        entries.extend([s, -s])
    entries.append(Fraction(rng.choice([1, -1, 2, -2, 3, -3, 5, -5])))
    rng.shuffle(entries)
    return DiagForm(tuple(entries))


def random_element(algebra: EtaleInvolutionAlgebra, rng: random.Random,
                   height: int = 3):
    parts = []
    for fac in algebra.factors:
        u = [rng.randint(-height, height) for _ in range(fac.degree)]
        w = [rng.randint(-height, height) for _ in range(fac.degree)]
        parts.append((u, w))
    return algebra.element(parts,
                           rng.randint(-height, height) if algebra.fixed else None)
