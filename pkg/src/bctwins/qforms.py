"""Diagonal rational quadratic forms: the complete invariant system
(dimension, determinant square class, Hasse invariants, signature), local
Witt indices, global isotropy, equivalence and similarity, and congruence
diagonalization of symmetric rational matrices.

Hasse invariant convention: eps_v(<a_1,...,a_n>) = prod_{i<j} (a_i, a_j)_v.
All reference values for split forms are computed in the same convention,
so every decision made here is convention-independent.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .symbols import (
    REAL_PLACE,
    Place,
    Rational,
    hilbert,
    is_square_at,
    square_class,
    support_places,
)


class FormError(ValueError):
    """Invalid quadratic-form input."""


class DegenerateFormError(FormError):
    """A constructed Gram matrix turned out to be singular.

    Callers rely on this being distinct: the trace-form constructions promise
    nondegeneracy, so hitting it means a bug or bad input, not a soft failure.
    """


@dataclass(frozen=True)
class DiagForm:
    """Nondegenerate diagonal quadratic form <a_1, ..., a_n> over Q."""

    entries: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.entries:
            raise FormError("empty diagonal form")
        for a in self.entries:
            if a == 0:
                raise FormError("diagonal entries must be nonzero")

    @staticmethod
    def of(*entries: Rational) -> "DiagForm":
        return DiagForm(tuple(Fraction(a) for a in entries))

    @staticmethod
    def repeated(count: int, value: Rational) -> "DiagForm":
        """The form count<value>."""
        return DiagForm.of(*([value] * count))

    @property
    def dim(self) -> int:
        return len(self.entries)

    def det_class(self) -> int:
        prod = Fraction(1)
        for a in self.entries:
            prod *= a
        return square_class(prod)

    def signature(self) -> tuple[int, int]:
        pos = sum(1 for a in self.entries if a > 0)
        return pos, self.dim - pos

    def scale(self, c: Rational) -> "DiagForm":
        c = Fraction(c)
        if c == 0:
            raise FormError("scaling by zero")
        return DiagForm(tuple(c * a for a in self.entries))

    def concat(self, other: "DiagForm") -> "DiagForm":
        """Orthogonal sum."""
        return DiagForm(self.entries + other.entries)

    def value(self, x: Sequence[Rational]) -> Fraction:
        if len(x) != self.dim:
            raise FormError("vector dimension mismatch")
        return sum((a * Fraction(xi) ** 2 for a, xi in zip(self.entries, x)),
                   Fraction(0))

    def support(self) -> list[Place]:
        return support_places(self.entries)

    def __str__(self) -> str:
        return "<" + ",".join(str(a) for a in self.entries) + ">"


def hyperbolic_plane() -> DiagForm:
    return DiagForm.of(1, -1)


def split_form_odd(rank: int, last: Rational = 1) -> DiagForm:
    """rank hyperbolic planes plus <last>: the split form of SO_{2*rank+1}."""
    entries: list[Rational] = [1, -1] * rank + [last]
    return DiagForm.of(*entries)


@dataclass(frozen=True)
class FormInvariants:
    dim: int
    det: int  # squarefree representative
    hasse: dict[Place, int]  # on the support set; +1 off it
    signature: tuple[int, int]

    def hasse_at(self, v: Place) -> int:
        return self.hasse.get(v, 1)


def hasse_invariant(q: DiagForm, v: Place) -> int:
    eps = 1
    a = q.entries
    for i in range(len(a)):
        for j in range(i + 1, len(a)):
            eps *= hilbert(a[i], a[j], v)
    return eps


def invariants(q: DiagForm) -> FormInvariants:
    support = q.support()
    return FormInvariants(
        dim=q.dim,
        det=q.det_class(),
        hasse={v: hasse_invariant(q, v) for v in support},
        signature=q.signature(),
    )


# ---------------------------------------------------------------------------
# Local classification
# ---------------------------------------------------------------------------

def _isotropic_local(n: int, d: int, eps: int, v: Place) -> bool:
    """Isotropy over Q_p from (dim, det class, Hasse at p), p finite."""
    p = v.p
    if n >= 5:
        return True
    if n == 4:
        return (not is_square_at(d, v)) or eps == hilbert(-1, -1, v)
    if n == 3:
        return eps == hilbert(-1, -d, v)
    if n == 2:
        return is_square_at(-d, v)
    return False


def witt_index(q: DiagForm, v: Place) -> tuple[int, int]:
    """(witt_index, anisotropic_dim) of q over the completion at v."""
    if v.is_real:
        pos, neg = q.signature()
        return min(pos, neg), abs(pos - neg)
    n, d = q.dim, q.det_class()
    eps = hasse_invariant(q, v)
    w = 0
    # split off hyperbolic planes: H has det -1 and trivial Hasse, and
    # eps(H + q') = eps(q') * (-1, d(q'))_v
    while n >= 2 and _isotropic_local(n, d, eps, v):
        n -= 2
        d = square_class(-d)
        eps *= hilbert(-1, d, v)
        w += 1
    return w, n


def witt_profile(q: DiagForm) -> dict[Place, tuple[int, int]]:
    """(witt_index, anisotropic_dim) at every place of the support set."""
    return {v: witt_index(q, v) for v in q.support()}


def is_isotropic_global(q: DiagForm) -> bool:
    """Hasse-Minkowski: isotropic over Q iff isotropic at every place of the
    support set (off-support places are automatically isotropic)."""
    if q.dim == 1:
        return False
    return all(witt_index(q, v)[0] >= 1 for v in q.support())


def global_witt_index(q: DiagForm) -> int:
    """Witt index over Q, by stripping hyperbolic planes at the level of
    invariants: w(q) >= 1 iff q is isotropic, and q = H + q' transforms the
    invariant system deterministically."""
    n, d = q.dim, q.det_class()
    support = q.support()
    eps = {v: hasse_invariant(q, v) for v in support}
    pos, neg = q.signature()
    w = 0
    while n >= 2:
        if n == 2:
            iso = d == -1
        else:
            iso = (pos >= 1 and neg >= 1 and
                   all(_isotropic_local(n, d, eps[v], v)
                       for v in support if v.is_finite))
        if not iso:
            break
        n -= 2
        d = square_class(-d)
        for v in support:
            if v.is_finite:
                eps[v] *= hilbert(-1, d, v)
        pos -= 1
        neg -= 1
        w += 1
    return w


def equivalent(q1: DiagForm, q2: DiagForm, v: Place | None = None) -> bool:
    """Equivalence over the completion at v, or over Q when v is None.

    Decided by the invariant system (never by isometry search); over Q the
    system (dim, det, all local Hasse, signature) is complete.
    """
    if q1.dim != q2.dim:
        return False
    if v is not None:
        if v.is_real:
            return q1.signature() == q2.signature()
        d1, d2 = q1.det_class(), q2.det_class()
        return (is_square_at(Fraction(d1 * d2), v)
                and hasse_invariant(q1, v) == hasse_invariant(q2, v))
    if q1.det_class() != q2.det_class():
        return False
    if q1.signature() != q2.signature():
        return False
    support = support_places(list(q1.entries) + list(q2.entries))
    return all(hasse_invariant(q1, w) == hasse_invariant(q2, w)
               for w in support if w.is_finite)


def similar_odd(q1: DiagForm, q2: DiagForm) -> tuple[bool, Fraction | None]:
    """Similarity test for odd-dimensional forms.

    In odd dimension the only candidate scalar is the determinant ratio;
    returns (True, lam) with q1 ~ lam * q2, or (False, None).
    """
    if q1.dim != q2.dim:
        raise FormError("similar_odd needs equal dimensions")
    if q1.dim % 2 == 0:
        raise FormError("similar_odd: even dimension leaves the scalar "
                        "undetermined by the determinant")
    lam = Fraction(square_class(Fraction(q1.det_class()) * q2.det_class()))
    if equivalent(q1, q2.scale(lam)):
        return True, lam
    return False, None


# ---------------------------------------------------------------------------
# Congruence diagonalization
# ---------------------------------------------------------------------------

def diagonalize(gram: Sequence[Sequence[Rational]]) -> DiagForm:
    """Diagonal form congruent to a nondegenerate symmetric matrix, by
    simultaneous row/column elimination with pivot search."""
    n = len(gram)
    m = [[Fraction(gram[i][j]) for j in range(n)] for i in range(n)]
    for i in range(n):
        if len(gram[i]) != n:
            raise FormError("matrix is not square")
        for j in range(i + 1, n):
            if m[i][j] != m[j][i]:
                raise FormError("matrix is not symmetric")
    diag: list[Fraction] = []
    for k in range(n):
        if m[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if m[i][i] != 0), None)
            if pivot is not None:
                _swap(m, k, pivot)
            else:
                off = next(((i, j) for i in range(k, n) for j in range(i + 1, n)
                            if m[i][j] != 0), None)
                if off is None:
                    raise DegenerateFormError("singular symmetric matrix")
                i, j = off
                # row/col add makes the (i,i) entry 2*m[i][j] != 0
                for t in range(k, n):
                    m[i][t] += m[j][t]
                for t in range(k, n):
                    m[t][i] += m[t][j]
                _swap(m, k, i)
        a = m[k][k]
        diag.append(a)
        for i in range(k + 1, n):
            c = m[i][k] / a
            if c == 0:
                continue
            for t in range(k, n):
                m[i][t] -= c * m[k][t]
            for t in range(k, n):
                m[t][i] -= c * m[t][k]
    return DiagForm(tuple(diag))


def _swap(m: list[list[Fraction]], i: int, j: int) -> None:
    m[i], m[j] = m[j], m[i]
    for row in m:
        row[i], row[j] = row[j], row[i]


def gram_of(q: DiagForm) -> list[list[Fraction]]:
    n = q.dim
    return [[q.entries[i] if i == j else Fraction(0) for j in range(n)]
            for i in range(n)]
