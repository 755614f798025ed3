"""Dense univariate polynomial arithmetic over Q (tuples of Fraction,
ascending degree), plus Sturm-sequence real root isolation with exact
rational interval endpoints and finite-field irreducibility probes.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Poly = tuple[Fraction, ...]  # ascending coefficients; () is the zero polynomial

ZERO: Poly = ()
ONE: Poly = (Fraction(1),)
X: Poly = (Fraction(0), Fraction(1))


def poly(coeffs: Sequence) -> Poly:
    return strip(tuple(Fraction(c) for c in coeffs))


def strip(p: Sequence[Fraction]) -> Poly:
    n = len(p)
    while n > 0 and p[n - 1] == 0:
        n -= 1
    return tuple(p[:n])


def degree(p: Poly) -> int:
    return len(p) - 1  # -1 for the zero polynomial


def constant(p: Poly) -> Fraction:
    return p[0] if p else Fraction(0)


def add(p: Poly, q: Poly) -> Poly:
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] += c
    return strip(out)


def neg(p: Poly) -> Poly:
    return tuple(-c for c in p)


def sub(p: Poly, q: Poly) -> Poly:
    return add(p, neg(q))


def mul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return ZERO
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return strip(out)


def scale(p: Poly, c: Fraction) -> Poly:
    if c == 0:
        return ZERO
    return tuple(c * a for a in p)


def divmod_poly(p: Poly, q: Poly) -> tuple[Poly, Poly]:
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(p)
    dq, lead = len(q) - 1, q[-1]
    quot = [Fraction(0)] * max(len(p) - dq, 0)
    while len(r) - 1 >= dq and strip(r):
        r = list(strip(r))
        if len(r) - 1 < dq:
            break
        c = r[-1] / lead
        k = len(r) - 1 - dq
        quot[k] = c
        for i, b in enumerate(q):
            r[k + i] -= c * b
        r = r[:-1]
    return strip(quot), strip(r)


def rem(p: Poly, q: Poly) -> Poly:
    return divmod_poly(p, q)[1]


def monic(p: Poly) -> Poly:
    if not p:
        return ZERO
    return scale(p, 1 / p[-1])


def gcd(p: Poly, q: Poly) -> Poly:
    while q:
        p, q = q, rem(p, q)
    return monic(p)


def xgcd(p: Poly, q: Poly) -> tuple[Poly, Poly, Poly]:
    """(g, s, t) with s*p + t*q = g = monic gcd."""
    r0, r1 = p, q
    s0, s1 = ONE, ZERO
    t0, t1 = ZERO, ONE
    while r1:
        qt, r = divmod_poly(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(qt, s1))
        t0, t1 = t1, sub(t0, mul(qt, t1))
    if not r0:
        return ZERO, ZERO, ZERO
    c = 1 / r0[-1]
    return scale(r0, c), scale(s0, c), scale(t0, c)


def derivative(p: Poly) -> Poly:
    return strip(tuple(p[i] * i for i in range(1, len(p))))


def evaluate(p: Poly, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def mulmod(p: Poly, q: Poly, f: Poly) -> Poly:
    return rem(mul(p, q), f)


def powmod(p: Poly, e: int, f: Poly) -> Poly:
    out = rem(ONE, f)
    base = rem(p, f)
    while e:
        if e & 1:
            out = mulmod(out, base, f)
        base = mulmod(base, base, f)
        e >>= 1
    return out


def invmod(p: Poly, f: Poly) -> Poly:
    """Inverse of p modulo f; requires gcd(p, f) = 1."""
    g, s, _ = xgcd(p, f)
    if degree(g) != 0:
        raise ZeroDivisionError("element is not invertible in the quotient")
    return rem(scale(s, 1 / g[0]), f)


# ---------------------------------------------------------------------------
# Real root isolation (Sturm sequences, exact rational endpoints)
# ---------------------------------------------------------------------------

def sturm_sequence(f: Poly) -> list[Poly]:
    f = monic(scale(f, 1 / gcd_content(f)))
    sf = divmod_poly(f, gcd(f, derivative(f)))[0]  # squarefree part
    seq = [sf, derivative(sf)]
    while seq[-1]:
        seq.append(neg(rem(seq[-2], seq[-1])))
    return seq[:-1]


def gcd_content(f: Poly) -> Fraction:
    return f[-1] if f else Fraction(1)


def _variations(values: list[Fraction]) -> int:
    signs = [1 if v > 0 else -1 for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_variations(seq: list[Poly], x: Fraction) -> int:
    return _variations([evaluate(p, x) for p in seq])


def count_roots(seq: list[Poly], a: Fraction, b: Fraction) -> int:
    """Number of distinct real roots in (a, b]."""
    return sturm_variations(seq, a) - sturm_variations(seq, b)


def root_bound(f: Poly) -> Fraction:
    """Cauchy bound: all real roots lie in (-B, B)."""
    lead = abs(f[-1])
    return 1 + max((abs(c) for c in f[:-1]), default=Fraction(0)) / lead


def isolate_real_roots(f: Poly) -> list[tuple[Fraction, Fraction]]:
    """Disjoint open rational intervals (a, b), each containing exactly one
    real root of f, ordered increasingly. Roots of f need not be simple."""
    if degree(f) <= 0:
        return []
    seq = sturm_sequence(f)
    bound = root_bound(f)
    out: list[tuple[Fraction, Fraction]] = []
    stack = [(-bound, bound)]
    while stack:
        a, b = stack.pop()
        n = count_roots(seq, a, b)
        if n == 0:
            continue
        if n == 1:
            # shrink until the endpoints are not roots (they aren't: Sturm
            # counting is on (a, b] and we bisect at non-root midpoints)
            out.append((a, b))
            continue
        mid = (a + b) / 2
        while evaluate(f, mid) == 0:
            mid = (mid + b) / 2
        stack.append((a, mid))
        stack.append((mid, b))
    out.sort()
    return out


def refine_root(f: Poly, interval: tuple[Fraction, Fraction],
                seq: list[Poly] | None = None) -> tuple[Fraction, Fraction]:
    """One bisection step on an isolating interval."""
    a, b = interval
    seq = seq or sturm_sequence(f)
    mid = (a + b) / 2
    while evaluate(f, mid) == 0:
        mid = (mid + b) / 2
    if count_roots(seq, a, mid) == 1:
        return a, mid
    return mid, b


def interval_eval(p: Poly, lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    """Interval Horner evaluation: a rational interval containing p([lo, hi])."""
    alo = ahi = Fraction(0)
    for c in reversed(p):
        products = (alo * lo, alo * hi, ahi * lo, ahi * hi)
        alo, ahi = min(products) + c, max(products) + c
    return alo, ahi


def sign_at_root(g: Poly, f: Poly,
                 interval: tuple[Fraction, Fraction]) -> int:
    """Exact sign of g(rho) where rho is the unique root of f in `interval`.

    Requires g(rho) != 0 (i.e. gcd(g, f) does not vanish at rho); refines the
    interval until the interval image of g excludes zero, which is then
    guaranteed to terminate.
    """
    seq = sturm_sequence(f)
    a, b = interval
    while True:
        lo, hi = interval_eval(g, a, b)
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        a, b = refine_root(f, (a, b), seq)


# ---------------------------------------------------------------------------
# Irreducibility probing
# ---------------------------------------------------------------------------

def rational_roots(f: Poly) -> list[Fraction]:
    """All rational roots, via the rational root theorem on a cleared form."""
    from math import lcm

    if degree(f) <= 0:
        return []
    den = lcm(*[c.denominator for c in f])
    ints = [int(c * den) for c in f]
    if ints[0] == 0:
        rest = rational_roots(poly(ints[1:]))
        return sorted(set([Fraction(0)] + rest))
    a0, an = abs(ints[0]), abs(ints[-1])
    roots = set()
    for p in _divisors(a0):
        for q in _divisors(an):
            for s in (1, -1):
                cand = Fraction(s * p, q)
                if evaluate(f, cand) == 0:
                    roots.add(cand)
    return sorted(roots)


def _divisors(n: int) -> list[int]:
    n = abs(n)
    if n == 0:
        return [1]
    out = set()
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.add(d)
            out.add(n // d)
        d += 1
    return sorted(out)


def is_squarefree(f: Poly) -> bool:
    return degree(gcd(f, derivative(f))) == 0


# --- arithmetic mod p (dense int lists) ---

def _mod_strip(p: list[int], m: int) -> list[int]:
    p = [c % m for c in p]
    while p and p[-1] == 0:
        p.pop()
    return p


def _mod_rem(p: list[int], q: list[int], m: int) -> list[int]:
    p = _mod_strip(p, m)
    q = _mod_strip(q, m)
    inv_lead = pow(q[-1], -1, m)
    while len(p) >= len(q):
        c = p[-1] * inv_lead % m
        k = len(p) - len(q)
        for i, b in enumerate(q):
            p[k + i] = (p[k + i] - c * b) % m
        p = _mod_strip(p, m)
        if not p:
            break
    return p


def _mod_gcd(p: list[int], q: list[int], m: int) -> list[int]:
    p, q = _mod_strip(p, m), _mod_strip(q, m)
    while q:
        p, q = q, _mod_rem(p, q, m)
    inv = pow(p[-1], -1, m)
    return [c * inv % m for c in p]


def _mod_mulrem(p: list[int], q: list[int], f: list[int], m: int) -> list[int]:
    out = [0] * (len(p) + len(q) - 1) if p and q else []
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] = (out[i + j] + a * b) % m
    return _mod_rem(out, f, m)


def factor_degree_set(f: Poly, p: int) -> set[int] | None:
    """Achievable degree sums of monic factors of f mod p, or None when f is
    not squarefree mod p (probe uninformative)."""
    from math import lcm
    den = lcm(*[c.denominator for c in f])
    fp = _mod_strip([int(c * den) % p for c in f], p)
    if len(fp) != len(f):  # leading coefficient vanished
        return None
    der = _mod_strip([fp[i] * i for i in range(1, len(fp))], p)
    if not der or len(_mod_gcd(fp, der, p)) != 1:
        return None
    # distinct-degree factorization: degrees of irreducible factors
    degrees: list[int] = []
    h = [0, 1]  # x
    work = list(fp)
    d = 0
    while len(work) - 1 > 0:
        d += 1
        if 2 * d > len(work) - 1:
            degrees.append(len(work) - 1)
            break
        # h = x^(p^d) mod work, maintained incrementally
        h = _mod_powmod(h if d > 1 else [0, 1], p, work, p)
        g = _mod_gcd(work, [(a - b) % p for a, b in
                            _zip_pad(h, [0, 1])], p)
        if len(g) - 1 > 0:
            degrees.extend([d] * ((len(g) - 1) // d))
            work = _mod_divexact(work, g, p)
            h = _mod_rem(h, work, p)
    sums = {0}
    for d in degrees:
        sums |= {s + d for s in sums}
    return sums


def _zip_pad(a: list[int], b: list[int]) -> list[tuple[int, int]]:
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0, b[i] if i < len(b) else 0)
            for i in range(n)]


def _mod_powmod(base: list[int], e: int, f: list[int], m: int) -> list[int]:
    out = _mod_rem([1], f, m)
    base = _mod_rem(list(base), f, m)
    while e:
        if e & 1:
            out = _mod_mulrem(out, base, f, m)
        base = _mod_mulrem(base, base, f, m)
        e >>= 1
    return out


def _mod_divexact(p: list[int], q: list[int], m: int) -> list[int]:
    p = list(p)
    out = [0] * (len(p) - len(q) + 1)
    inv_lead = pow(q[-1], -1, m)
    while len(p) >= len(q) and any(p):
        p = _mod_strip(p, m)
        if len(p) < len(q):
            break
        c = p[-1] * inv_lead % m
        k = len(p) - len(q)
        out[k] = c
        for i, b in enumerate(q):
            p[k + i] = (p[k + i] - c * b) % m
    return _mod_strip(out, m)


_PROBE_PRIMES = (3, 5, 7, 11, 13, 17, 19, 23, 29, 31)


def certify_irreducible(f: Poly) -> bool:
    """True when irreducibility over Q is certified.

    Certification: no rational roots, squarefree, and the intersection over
    finite-field probes of achievable factor-degree sums is {0, deg f}.
    A False return means "not certified", not "reducible"; callers holding a
    user assertion may proceed anyway.
    """
    n = degree(f)
    if n <= 0:
        return False
    if n == 1:
        return True
    if not is_squarefree(f):
        return False
    if rational_roots(f):
        return False
    sums: set[int] | None = None
    for p in _PROBE_PRIMES:
        s = factor_degree_set(f, p)
        if s is None:
            continue
        sums = s if sums is None else (sums & s)
        if sums == {0, n}:
            return True
    return False
