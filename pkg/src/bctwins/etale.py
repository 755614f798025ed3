"""Etale Q-algebras with involution in the normal form

    E = prod_j F_j[delta]/(delta^2 - d_j),  sigma(delta) = -delta,

optionally times one fixed factor (Q, id).  Provides element arithmetic,
real-place types, trace/transfer forms, the coefficient-form construction
used for orthogonal embeddings, and the +/- fixed-factor correspondence
between odd and even algebras.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import polys
from .polys import Poly
from .qforms import DiagForm, diagonalize
from .symbols import Rational


class AlgebraError(ValueError):
    """Invalid algebra data."""


class GeneratorSearchError(RuntimeError):
    """Could not find a power-basis generator within the trial budget;
    retry with a larger height bound."""


# ---------------------------------------------------------------------------
# Exact linear algebra over Q (small dense systems)
# ---------------------------------------------------------------------------

def mat_rank(rows: Sequence[Sequence[Fraction]]) -> int:
    m = [list(r) for r in rows]
    rank = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        pivot = next((i for i in range(rank, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        pr = m[rank]
        for i in range(len(m)):
            if i != rank and m[i][c] != 0:
                f = m[i][c] / pr[c]
                m[i] = [a - f * b for a, b in zip(m[i], pr)]
        rank += 1
    return rank


def mat_solve(rows: Sequence[Sequence[Fraction]],
              rhs: Sequence[Fraction]) -> list[Fraction]:
    """Solve a square nonsingular system exactly."""
    n = len(rows)
    m = [list(rows[i]) + [Fraction(rhs[i])] for i in range(n)]
    for c in range(n):
        pivot = next((i for i in range(c, n) if m[i][c] != 0), None)
        if pivot is None:
            raise AlgebraError("singular system")
        m[c], m[pivot] = m[pivot], m[c]
        pr = m[c]
        for i in range(n):
            if i != c and m[i][c] != 0:
                f = m[i][c] / pr[c]
                m[i] = [a - f * b for a, b in zip(m[i], pr)]
    return [m[i][n] / m[i][i] for i in range(n)]


# ---------------------------------------------------------------------------
# Algebra data
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class NumberFieldFactor:
    """F = Q[x]/(min_poly), min_poly monic of degree >= 1."""

    min_poly: Poly

    def __post_init__(self):
        f = self.min_poly
        if polys.degree(f) < 1:
            raise AlgebraError("min_poly must have degree >= 1")
        if f[-1] != 1:
            raise AlgebraError("min_poly must be monic")

    @property
    def degree(self) -> int:
        return polys.degree(self.min_poly)

    def trace(self, u: Poly) -> Fraction:
        """Trace over Q of the residue u (trace of multiplication by u)."""
        f = self.min_poly
        cur = polys.rem(u, f)  # u * x^i mod f, starting at i = 0
        t = Fraction(0)
        for i in range(self.degree):
            t += cur[i] if i < len(cur) else Fraction(0)
            cur = polys.mulmod(cur, polys.X, f)
        return t


@dataclass(frozen=True)
class DoubledFactor:
    """F[delta]/(delta^2 - d) with sigma(delta) = -delta."""

    field: NumberFieldFactor
    d: Poly  # residue mod min_poly, invertible

    def __post_init__(self):
        f = self.field.min_poly
        d = polys.rem(self.d, f)
        if not d:
            raise AlgebraError("d must be nonzero")
        if polys.degree(polys.gcd(d, f)) != 0:
            raise AlgebraError("d must be invertible in F")

    @property
    def degree(self) -> int:
        return self.field.degree


@dataclass(frozen=True)
class EtaleInvolutionAlgebra:
    factors: tuple[DoubledFactor, ...]
    fixed: int  # number of (Q, id) factors: 0 or 1

    def __post_init__(self):
        if self.fixed not in (0, 1):
            raise AlgebraError("at most one fixed factor (Q, id) is allowed")

    @staticmethod
    def create(factors: Sequence[tuple[Sequence[Rational], Sequence[Rational]]],
               fixed: int = 0,
               assert_irreducible: bool = False) -> "EtaleInvolutionAlgebra":
        """Build from raw (min_poly coefficients, d coefficients) pairs.

        Irreducibility is certified by a rational-root test plus
        finite-field factorization probes; pass assert_irreducible=True to
        accept a polynomial the probes cannot certify (reducible inputs only
        refine the factor list, they do not break soundness of the forms).
        """
        built = []
        for coeffs, dcoeffs in factors:
            f = polys.poly(coeffs)
            if polys.degree(f) >= 1 and f[-1] != 1:
                raise AlgebraError("min_poly must be monic")
            if not polys.is_squarefree(f):
                raise AlgebraError(f"min_poly {list(coeffs)} is not squarefree")
            if not assert_irreducible and not polys.certify_irreducible(f):
                if polys.degree(f) > 1:
                    raise AlgebraError(
                        f"could not certify irreducibility of {list(coeffs)}; "
                        "pass assert_irreducible=True to accept it")
            built.append(DoubledFactor(NumberFieldFactor(f), polys.poly(dcoeffs)))
        return EtaleInvolutionAlgebra(tuple(built), fixed)

    @property
    def dim(self) -> int:
        return 2 * sum(f.degree for f in self.factors) + self.fixed

    @property
    def fixed_subalgebra_dim(self) -> int:
        return sum(f.degree for f in self.factors) + self.fixed

    def one(self) -> "AlgebraElement":
        parts = tuple((polys.ONE, polys.ZERO) for _ in self.factors)
        return AlgebraElement(self, parts, Fraction(1) if self.fixed else None)

    def delta(self) -> "AlgebraElement":
        """The element that is delta in every doubled factor (and 0 in the
        fixed factor, which only exists for odd algebras)."""
        parts = tuple((polys.ZERO, polys.ONE) for _ in self.factors)
        return AlgebraElement(self, parts, Fraction(0) if self.fixed else None)

    def element(self, parts, fixed_part=None) -> "AlgebraElement":
        norm = []
        for (u, w), fac in zip(parts, self.factors):
            f = fac.field.min_poly
            norm.append((polys.rem(polys.poly(u), f), polys.rem(polys.poly(w), f)))
        fp = None
        if self.fixed:
            fp = Fraction(fixed_part if fixed_part is not None else 0)
        return AlgebraElement(self, tuple(norm), fp)

    def standard_basis(self) -> list["AlgebraElement"]:
        """Per factor: theta^i then theta^i * delta; fixed factor last."""
        basis = []
        for j, fac in enumerate(self.factors):
            for eps in (0, 1):
                for i in range(fac.degree):
                    parts = []
                    for k, other in enumerate(self.factors):
                        u = w = polys.ZERO
                        if k == j:
                            mono = polys.poly([0] * i + [1])
                            u, w = (mono, polys.ZERO) if eps == 0 else (polys.ZERO, mono)
                        parts.append((u, w))
                    basis.append(AlgebraElement(self, tuple(parts),
                                                Fraction(0) if self.fixed else None))
        if self.fixed:
            parts = tuple((polys.ZERO, polys.ZERO) for _ in self.factors)
            basis.append(AlgebraElement(self, parts, Fraction(1)))
        return basis


@dataclass(frozen=True)
class AlgebraElement:
    algebra: EtaleInvolutionAlgebra
    parts: tuple[tuple[Poly, Poly], ...]  # (u, w) meaning u + w*delta
    fixed_part: Optional[Fraction]

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        parts = tuple((polys.add(u1, u2), polys.add(w1, w2))
                      for (u1, w1), (u2, w2) in zip(self.parts, other.parts))
        fp = None
        if self.fixed_part is not None:
            fp = self.fixed_part + other.fixed_part
        return AlgebraElement(self.algebra, parts, fp)

    def __mul__(self, other: "AlgebraElement") -> "AlgebraElement":
        parts = []
        for (u1, w1), (u2, w2), fac in zip(self.parts, other.parts,
                                           self.algebra.factors):
            f = fac.field.min_poly
            u = polys.add(polys.mulmod(u1, u2, f),
                          polys.mulmod(fac.d, polys.mulmod(w1, w2, f), f))
            w = polys.add(polys.mulmod(u1, w2, f), polys.mulmod(w1, u2, f))
            parts.append((polys.rem(u, f), w))
        fp = None
        if self.fixed_part is not None:
            fp = self.fixed_part * other.fixed_part
        return AlgebraElement(self.algebra, tuple(parts), fp)

    def scaled(self, c: Rational) -> "AlgebraElement":
        c = Fraction(c)
        parts = tuple((polys.scale(u, c), polys.scale(w, c))
                      for u, w in self.parts)
        fp = None if self.fixed_part is None else c * self.fixed_part
        return AlgebraElement(self.algebra, parts, fp)

    def sigma(self) -> "AlgebraElement":
        parts = tuple((u, polys.neg(w)) for u, w in self.parts)
        return AlgebraElement(self.algebra, parts, self.fixed_part)

    def is_fixed(self) -> bool:
        return all(not w for _, w in self.parts)

    def is_anti_fixed(self) -> bool:
        return all(not u for u, _ in self.parts) and not self.fixed_part

    def is_invertible(self) -> bool:
        for (u, w), fac in zip(self.parts, self.algebra.factors):
            f = fac.field.min_poly
            norm = polys.sub(polys.mulmod(u, u, f),
                             polys.mulmod(fac.d, polys.mulmod(w, w, f), f))
            norm = polys.rem(norm, f)
            if not norm or polys.degree(polys.gcd(norm, f)) != 0:
                return False
        if self.fixed_part is not None and self.fixed_part == 0:
            return False
        return True

    def trace(self) -> Fraction:
        """Trace of the multiplication operator over Q."""
        t = Fraction(0)
        for (u, _), fac in zip(self.parts, self.algebra.factors):
            t += 2 * fac.field.trace(u)
        if self.fixed_part is not None:
            t += self.fixed_part
        return t

    def coords(self) -> list[Fraction]:
        """Coordinates in the standard basis of the algebra."""
        out: list[Fraction] = []
        for (u, w), fac in zip(self.parts, self.algebra.factors):
            m = fac.degree
            out.extend(list(u) + [Fraction(0)] * (m - len(u)))
            out.extend(list(w) + [Fraction(0)] * (m - len(w)))
        if self.fixed_part is not None:
            out.append(self.fixed_part)
        return out

    def power(self, k: int) -> "AlgebraElement":
        out = self.algebra.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out


# ---------------------------------------------------------------------------
# Structure operations
# ---------------------------------------------------------------------------

def check_dimension_condition(e: EtaleInvolutionAlgebra) -> bool:
    """dim E^sigma == floor((n+1)/2), re-derived from the factor data."""
    n = e.dim
    return e.fixed_subalgebra_dim == (n + 1) // 2 and e.fixed == n % 2


def split_off_fixed(e: EtaleInvolutionAlgebra) -> EtaleInvolutionAlgebra:
    if e.dim % 2 == 0:
        raise AlgebraError("split_off_fixed needs an odd-dimensional algebra")
    return EtaleInvolutionAlgebra(e.factors, 0)


def append_fixed(e: EtaleInvolutionAlgebra) -> EtaleInvolutionAlgebra:
    if e.dim % 2 == 1:
        raise AlgebraError("append_fixed needs an even-dimensional algebra")
    return EtaleInvolutionAlgebra(e.factors, 1)


# ---------------------------------------------------------------------------
# Real type (Table of indecomposable real algebras with involution)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RealType:
    """Multiplicities of the indecomposable real algebras with involution:
    (R, id), (R x R, switch), (C, conj), (C x C, switch)."""

    n_r: int
    n_rr: int
    n_c: int
    n_cc: int

    def total_dim(self) -> int:
        return self.n_r + 2 * self.n_rr + 2 * self.n_c + 4 * self.n_cc

    def torus_type(self) -> tuple[int, int, int]:
        """(alpha, beta, gamma) of the torus SU(E (x) R, sigma)."""
        return self.n_rr, self.n_c, self.n_cc


def real_type(e: EtaleInvolutionAlgebra) -> RealType:
    n_rr = n_c = n_cc = 0
    for fac in e.factors:
        f = fac.field.min_poly
        d = polys.rem(fac.d, f)
        intervals = polys.isolate_real_roots(f)
        for iv in intervals:
            if polys.sign_at_root(d, f, iv) > 0:
                n_rr += 1
            else:
                n_c += 1
        n_cc += (fac.degree - len(intervals)) // 2
    return RealType(e.fixed, n_rr, n_c, n_cc)


# ---------------------------------------------------------------------------
# Transfer forms
# ---------------------------------------------------------------------------

def transfer_gram(e: EtaleInvolutionAlgebra,
                  b: AlgebraElement) -> list[list[Fraction]]:
    """Gram matrix of phi_b(x, y) = tr(x * b * sigma(y)) on the standard
    basis, assembled per factor as the transfer of <2b, -2bd>."""
    if not b.is_fixed():
        raise AlgebraError("b must be fixed by the involution")
    if not b.is_invertible():
        raise AlgebraError("b must be invertible")
    blocks: list[list[list[Fraction]]] = []
    for (bu, _), fac in zip(b.parts, e.factors):
        f = fac.field.min_poly
        m = fac.degree
        powers = [polys.rem(polys.poly([0] * k + [1]), f) for k in range(2 * m - 1)]
        tr_b = [fac.field.trace(polys.mulmod(bu, pk, f)) for pk in powers]
        bd = polys.mulmod(bu, fac.d, f)
        tr_bd = [fac.field.trace(polys.mulmod(bd, pk, f)) for pk in powers]
        blocks.append([[2 * tr_b[i + k] for k in range(m)] for i in range(m)])
        blocks.append([[-2 * tr_bd[i + k] for k in range(m)] for i in range(m)])
    if e.fixed:
        blocks.append([[b.fixed_part]])
    return _block_diag(blocks)


def _block_diag(blocks: list[list[list[Fraction]]]) -> list[list[Fraction]]:
    n = sum(len(b) for b in blocks)
    out = [[Fraction(0)] * n for _ in range(n)]
    off = 0
    for blk in blocks:
        for i, row in enumerate(blk):
            for j, val in enumerate(row):
                out[off + i][off + j] = Fraction(val)
        off += len(blk)
    return out


def transfer_form(e: EtaleInvolutionAlgebra, b: AlgebraElement) -> DiagForm:
    """phi_b reduced to diagonal form; nondegenerate for invertible fixed b."""
    return diagonalize(transfer_gram(e, b))


def transfer_gram_direct(e: EtaleInvolutionAlgebra,
                         b: AlgebraElement) -> list[list[Fraction]]:
    """phi_b computed entry-by-entry from element arithmetic (test oracle for
    the per-factor assembly)."""
    basis = e.standard_basis()
    return [[(x * b * y.sigma()).trace() for y in basis] for x in basis]


def discriminant_class(e: EtaleInvolutionAlgebra) -> int:
    """d(E, sigma): the determinant square class of phi_b for an even
    algebra, independent of the choice of invertible fixed b (a fixed factor
    would contribute <b> and break independence, so odd input is rejected)."""
    if e.dim % 2:
        raise AlgebraError("d(E, sigma) is defined for even algebras only")
    return transfer_form(e, e.one()).det_class()


# ---------------------------------------------------------------------------
# The coefficient form h(x, y) = c_{n-2}(x sigma(y))
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LemmaForm:
    """Symmetric bilinear form on an even algebra E built from a power-basis
    generator e in E_- : h(x, y) = c_{n-2}(x sigma(y)) in the basis
    {1, e, ..., e^{n-1}}.  The span of 1, e, ..., e^{l-2} is totally
    isotropic, so the global Witt index is >= l - 1."""

    algebra: EtaleInvolutionAlgebra
    generator: AlgebraElement
    gram: tuple[tuple[Fraction, ...], ...]
    power_basis: tuple[AlgebraElement, ...]

    @property
    def dim(self) -> int:
        return len(self.gram)

    def to_power_coords(self, x: AlgebraElement) -> list[Fraction]:
        rows = [b.coords() for b in self.power_basis]
        cols = [[rows[k][i] for k in range(len(rows))] for i in range(len(rows))]
        return mat_solve(cols, x.coords())

    def evaluate(self, x: AlgebraElement, y: AlgebraElement) -> Fraction:
        coords = self.to_power_coords(x * y.sigma())
        return coords[self.dim - 2]

    def diag(self) -> DiagForm:
        return diagonalize([list(r) for r in self.gram])

    def isotropic_power_span(self) -> int:
        """Dimension of the certified totally isotropic span {e^i : i <= l-2}."""
        return self.dim // 2 - 1


def _random_anti_fixed(e: EtaleInvolutionAlgebra, height: int,
                       rng: random.Random) -> AlgebraElement:
    parts = []
    for fac in e.factors:
        while True:
            w = polys.poly([rng.randint(-height, height)
                            for _ in range(fac.degree)])
            if w:
                break
        parts.append((polys.ZERO, w))
    return AlgebraElement(e, tuple(parts), Fraction(0) if e.fixed else None)


def lemma_form(e: EtaleInvolutionAlgebra, seed: int = 0,
               max_height: int = 2 ** 10) -> LemmaForm:
    """Find a power-basis generator in E_- and build the coefficient form.

    Randomized search over anti-fixed elements of bounded coefficient height,
    doubling the height bound; independence of the powers 1, e, ..., e^{n-1}
    is certified by exact rank computation.
    """
    if e.dim % 2 != 0 or e.fixed != 0:
        raise AlgebraError("lemma_form needs an even algebra with no fixed factor")
    if not e.factors:
        raise AlgebraError("lemma_form needs a nonempty algebra")
    n = e.dim
    rng = random.Random(seed)
    height = 1
    while height <= max_height:
        for _ in range(24):
            gen = _random_anti_fixed(e, height, rng)
            powers = [gen.power(k) for k in range(n)]
            if mat_rank([p.coords() for p in powers]) == n:
                return _build_lemma_form(e, gen, powers)
        height *= 2
    raise GeneratorSearchError(
        f"no power-basis generator found up to height {max_height}")


def _build_lemma_form(e: EtaleInvolutionAlgebra, gen: AlgebraElement,
                      powers: list[AlgebraElement]) -> LemmaForm:
    n = e.dim
    rows = [p.coords() for p in powers]
    cols = [[rows[k][i] for k in range(n)] for i in range(n)]
    # coordinates of e^k in the power basis for k up to 2n-2
    high = list(powers)
    for k in range(n, 2 * n - 1):
        high.append(high[-1] * gen)
    gamma = [mat_solve(cols, high[k].coords())[n - 2] for k in range(2 * n - 1)]
    gram = [[(-1) ** j * gamma[i + j] for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(n):
            if gram[i][j] != gram[j][i]:
                raise AlgebraError("coefficient form is not symmetric")
    return LemmaForm(e, gen, tuple(tuple(r) for r in gram), tuple(powers))


# ---------------------------------------------------------------------------
# Hermitian coefficient form over a quadratic field L = Q(sqrt(m))
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class QuadExt:
    """L = Q(sqrt(m)) for squarefree m != 0, 1; elements are (s, t) pairs
    meaning s + t*sqrt(m)."""

    m: int

    def __post_init__(self):
        from .symbols import square_class
        if self.m in (0, 1) or square_class(self.m) != self.m:
            raise AlgebraError("quadratic field needs squarefree m != 0, 1")

    def mul(self, a, b):
        (s1, t1), (s2, t2) = a, b
        return (s1 * s2 + self.m * t1 * t2, s1 * t2 + t1 * s2)

    def conj(self, a):
        s, t = a
        return (s, -t)

    def add(self, a, b):
        return (a[0] + b[0], a[1] + b[1])


@dataclass(frozen=True)
class UnitaryLemmaForm:
    """Hermitian form h(x, y) = c_{n-1}(x sigma(y)) on E = F (x) L in the
    basis {theta^i (x) 1}; conjugate-symmetric, nondegenerate, with the span
    of 1, theta, ..., theta^{floor(n/2)-1} totally isotropic, hence Witt
    index exactly floor(n/2)."""

    field: NumberFieldFactor
    ext: QuadExt
    gram: tuple[tuple[Fraction, ...], ...]  # rational entries

    @property
    def dim(self) -> int:
        return len(self.gram)

    def evaluate(self, x: Sequence[tuple[Fraction, Fraction]],
                 y: Sequence[tuple[Fraction, Fraction]]) -> tuple[Fraction, Fraction]:
        acc = (Fraction(0), Fraction(0))
        for i, xi in enumerate(x):
            for j, yj in enumerate(y):
                term = self.ext.mul(self.ext.mul(xi, self.ext.conj(yj)),
                                    (self.gram[i][j], Fraction(0)))
                acc = self.ext.add(acc, term)
        return acc

    def witt_index(self) -> int:
        return self.dim // 2


def unitary_lemma_form(field: NumberFieldFactor, m: int) -> UnitaryLemmaForm:
    """Coefficient hermitian form for E = F (x) Q(sqrt(m)) with
    sigma = id_F (x) conjugation; the generator is theta itself."""
    ext = QuadExt(m)
    f = field.min_poly
    n = field.degree
    coeff = []
    for k in range(2 * n - 1):
        r = polys.rem(polys.poly([0] * k + [1]), f)
        coeff.append(r[n - 1] if len(r) > n - 1 else Fraction(0))
    gram = tuple(tuple(coeff[i + j] for j in range(n)) for i in range(n))
    return UnitaryLemmaForm(field, ext, gram)
