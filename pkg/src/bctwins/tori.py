"""Maximal torus types of real groups SO(r, n-r) and Sp(r, l-r).

A real torus is GL_1^alpha x (circle)^beta x (Res_{C/R} GL_1)^gamma for a
unique triple (alpha, beta, gamma); this module enumerates the triples
occurring in the classical real forms of types B and C, compares and
partitions forms by their torus-type sets, and extracts the triple of an
integral involution acting on a character lattice.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence

TorusType = tuple[int, int, int]  # (alpha, beta, gamma)


class ToriError(ValueError):
    """Invalid real-form parameters."""


@dataclass(frozen=True)
class RealFormSpec:
    """SO(r, n-r) with n odd (type B, adjoint), Sp(r, l-r) (type C, simply
    connected, nonsplit family), or SplitC(l) = Sp_{2l}."""

    kind: str  # "SO" | "Sp" | "SplitC"
    r: int
    rank: int  # l

    def __post_init__(self):
        if self.kind == "SO":
            n = 2 * self.rank + 1
            if not (0 <= self.r <= n):
                raise ToriError(f"SO needs 0 <= r <= {n}")
        elif self.kind == "Sp":
            if not (0 <= self.r <= self.rank):
                raise ToriError(f"Sp needs 0 <= r <= {self.rank}")
        elif self.kind == "SplitC":
            pass
        else:
            raise ToriError(f"unknown real form kind {self.kind!r}")
        if self.rank < 2:
            raise ToriError("rank must be >= 2")

    @staticmethod
    def so(r: int, n_minus_r: int) -> "RealFormSpec":
        n = r + n_minus_r
        if n % 2 == 0:
            raise ToriError("SO(r, n-r) needs odd n here (type B)")
        return RealFormSpec("SO", r, (n - 1) // 2)

    @staticmethod
    def sp(r: int, l_minus_r: int) -> "RealFormSpec":
        return RealFormSpec("Sp", r, r + l_minus_r)

    @staticmethod
    def split_c(rank: int) -> "RealFormSpec":
        return RealFormSpec("SplitC", 0, rank)

    @staticmethod
    def parse(s: str) -> "RealFormSpec":
        s = s.strip()
        m = re.fullmatch(r"(SO|Sp)\((\d+)\s*,\s*(\d+)\)", s)
        if m:
            a, b = int(m.group(2)), int(m.group(3))
            return RealFormSpec.so(a, b) if m.group(1) == "SO" else RealFormSpec.sp(a, b)
        m = re.fullmatch(r"SplitC\((\d+)\)", s)
        if m:
            return RealFormSpec.split_c(int(m.group(1)))
        raise ToriError(f"cannot parse real form {s!r}")

    @property
    def is_split(self) -> bool:
        if self.kind == "SO":
            return min(self.r, 2 * self.rank + 1 - self.r) == self.rank
        return self.kind == "SplitC"

    @property
    def is_anisotropic(self) -> bool:
        if self.kind == "SO":
            return min(self.r, 2 * self.rank + 1 - self.r) == 0
        if self.kind == "Sp":
            return min(self.r, self.rank - self.r) == 0
        return False

    def __str__(self) -> str:
        if self.kind == "SO":
            return f"SO({self.r},{2 * self.rank + 1 - self.r})"
        if self.kind == "Sp":
            return f"Sp({self.r},{self.rank - self.r})"
        return f"SplitC({self.rank})"


def torus_types_b(r: int, n: int) -> tuple[TorusType, ...]:
    """Torus types of SO(r, n-r), n = 2l+1: alpha + beta + 2 gamma = l and
    alpha + 2 gamma <= min(r, n-r)."""
    if n % 2 == 0 or not (0 <= r <= n):
        raise ToriError("torus_types_b needs odd n and 0 <= r <= n")
    rank = (n - 1) // 2
    s = min(r, n - r)
    out = []
    for gamma in range(rank // 2 + 1):
        for alpha in range(rank - 2 * gamma + 1):
            if alpha + 2 * gamma <= s:
                out.append((alpha, rank - alpha - 2 * gamma, gamma))
    return tuple(sorted(out))


def torus_types_c(r: int, rank: int) -> tuple[TorusType, ...]:
    """Torus types of the nonsplit Sp(r, l-r): alpha = 0, beta + 2 gamma = l,
    gamma <= min(r, l-r)."""
    if not (0 <= r <= rank):
        raise ToriError("torus_types_c needs 0 <= r <= rank")
    s = min(r, rank - r)
    return tuple(sorted((0, rank - 2 * gamma, gamma)
                        for gamma in range(min(rank // 2, s) + 1)))


def torus_types(form: RealFormSpec) -> tuple[TorusType, ...]:
    if form.kind == "SO":
        return torus_types_b(form.r, 2 * form.rank + 1)
    if form.kind == "Sp":
        return torus_types_c(form.r, form.rank)
    # the split forms of B_l and C_l have the same torus sets
    return torus_types_b(form.rank, 2 * form.rank + 1)


def same_tori_real(g1: RealFormSpec, g2: RealFormSpec) -> bool:
    """Set equality of maximal-torus types for an adjoint B form and a simply
    connected C form of equal rank; cross-checked against the split/anisotropic
    dichotomy, which the classification makes equivalent."""
    if g1.kind != "SO" or g2.kind not in ("Sp", "SplitC"):
        raise ToriError("same_tori_real compares an SO form with an Sp/SplitC form")
    if g1.rank != g2.rank:
        raise ToriError("rank mismatch")
    eq = torus_types(g1) == torus_types(g2)
    dichotomy = ((g1.is_split and g2.is_split)
                 or (g1.is_anisotropic and g2.is_anisotropic))
    if eq != dichotomy:
        raise AssertionError(
            f"torus-set equality disagrees with the dichotomy for {g1}, {g2}")
    return eq


def classify_rank(forms: Sequence[RealFormSpec]) -> list[list[RealFormSpec]]:
    """Partition real forms (of one rank) into classes with equal torus-type
    sets.  Only SO/Sp/SplitC forms are supported: Spin and PSp forms are out
    of scope (the published rank-3 table obtains them from the Atlas
    software), so the emitted partition is the restriction of that table to
    the supported forms."""
    ranks = {f.rank for f in forms}
    if len(ranks) > 1:
        raise ToriError("classify_rank needs forms of equal rank")
    classes: dict[tuple[TorusType, ...], list[RealFormSpec]] = {}
    for f in forms:
        classes.setdefault(torus_types(f), []).append(f)
    out = [sorted(v, key=str) for v in classes.values()]
    return sorted(out, key=lambda cls: str(cls[0]))


def standard_forms(rank: int) -> list[RealFormSpec]:
    """All SO(r, n-r) for 0 <= r <= n, Sp(r, l-r) for 0 <= r <= floor(l/2),
    and SplitC, without duplicates (SO(r,*) and SO(n-r,*) coincide)."""
    n = 2 * rank + 1
    forms = [RealFormSpec.so(r, n - r) for r in range(rank + 1)]
    forms += [RealFormSpec.sp(r, rank - r) for r in range(rank // 2 + 1)]
    forms.append(RealFormSpec.split_c(rank))
    return forms


# ---------------------------------------------------------------------------
# Integral involutions on character lattices
# ---------------------------------------------------------------------------

def smith_normal_form(rows: Sequence[Sequence[int]]) -> tuple[list[list[int]], list[list[int]], list[list[int]]]:
    """(D, U, V) with U * A * V = D diagonal, U and V unimodular, and each
    diagonal entry dividing the next."""
    a = [list(map(int, r)) for r in rows]
    m, n = len(a), len(a[0]) if a else 0
    u = [[int(i == j) for j in range(m)] for i in range(m)]
    v = [[int(i == j) for j in range(n)] for i in range(n)]

    def row_op(i, j, c):  # row_i -= c * row_j
        a[i] = [x - c * y for x, y in zip(a[i], a[j])]
        u[i] = [x - c * y for x, y in zip(u[i], u[j])]

    def col_op(i, j, c):  # col_i -= c * col_j
        for r in a:
            r[i] -= c * r[j]
        for r in v:
            r[i] -= c * r[j]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    k = 0
    while k < m and k < n:
        # minimal-|pivot| selection guarantees progress at every step
        nz = [(abs(a[i][j]), i, j) for i in range(k, m) for j in range(k, n)
              if a[i][j] != 0]
        if not nz:
            break
        _, pi, pj = min(nz)
        swap_rows(k, pi)
        swap_cols(k, pj)
        p = a[k][k]
        reduced = False
        for i in range(k + 1, m):
            if a[i][k] % p != 0:
                row_op(i, k, a[i][k] // p)
                reduced = True
        for j in range(k + 1, n):
            if a[k][j] % p != 0:
                col_op(j, k, a[k][j] // p)
                reduced = True
        if reduced:
            continue  # a strictly smaller pivot now exists
        for i in range(k + 1, m):
            if a[i][k] != 0:
                row_op(i, k, a[i][k] // p)
        for j in range(k + 1, n):
            if a[k][j] != 0:
                col_op(j, k, a[k][j] // p)
        offender = next(((i, j) for i in range(k + 1, m)
                         for j in range(k + 1, n) if a[i][j] % p != 0), None)
        if offender is not None:
            row_op(k, offender[0], -1)  # pull the offending row up
            continue
        k += 1
    for i in range(min(m, n)):
        if a[i][i] < 0:
            a[i] = [-x for x in a[i]]
            u[i] = [-x for x in u[i]]
    return a, u, v


def integer_kernel_basis(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Basis of the saturated integer kernel {x : A x = 0} of an integer
    matrix, via Smith normal form (columns of V at zero diagonal entries)."""
    d, _, v = smith_normal_form(rows)
    m, n = len(rows), len(rows[0])
    basis = []
    for j in range(n):
        dj = d[j][j] if j < min(m, n) else 0
        if dj == 0:
            basis.append([v[i][j] for i in range(n)])
    return basis


def lattice_type(mat: Sequence[Sequence[int]]) -> TorusType:
    """(alpha, beta, gamma) of an integral involution M on Z^n:
    gamma = dim_F2 of L/(L+ + L-) for the +-1 eigen-sublattices,
    alpha = rank L+ - gamma, beta = rank L- - gamma."""
    n = len(mat)
    m = [[int(x) for x in row] for row in mat]
    for row in m:
        if len(row) != n:
            raise ToriError("matrix is not square")
    sq = [[sum(m[i][k] * m[k][j] for k in range(n)) for j in range(n)]
          for i in range(n)]
    if sq != [[int(i == j) for j in range(n)] for i in range(n)]:
        raise ToriError("matrix is not an involution (M^2 != I)")
    plus = integer_kernel_basis([[m[i][j] - int(i == j) for j in range(n)]
                                 for i in range(n)])
    minus = integer_kernel_basis([[m[i][j] + int(i == j) for j in range(n)]
                                  for i in range(n)])
    stacked = plus + minus
    if len(stacked) != n:
        raise ToriError("eigenlattice ranks do not sum to n")
    d, _, _ = smith_normal_form(stacked)
    gamma = 0
    for i in range(n):
        di = abs(d[i][i])
        if di == 2:
            gamma += 1
        elif di != 1:
            raise AssertionError("quotient by L+ + L- is not elementary 2-group")
    return len(plus) - gamma, len(minus) - gamma, gamma
