"""Global group data over Q and the twin-based decision procedures.

A type B group is SO(q) for an odd-dimensional rational quadratic form; a
type C group is SU(h) for a diagonal hermitian form over a rational
quaternion algebra.  Twins are decided from local ranks: at every finite
place both groups must be split, and at the real place both split or both
anisotropic.  The rank-3-and-up decision procedures (weak commensurability,
same isogeny/isomorphism classes of tori) all reduce to the twin test; the
rank-2 case has its own similarity + local dichotomy criterion.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .qforms import DiagForm, similar_odd, witt_index
from .symbols import (
    REAL_PLACE,
    Place,
    Rational,
    hilbert,
    square_class,
    support_places,
)


class GroupError(ValueError):
    """Invalid group data or parameters."""


class RankTwoError(GroupError):
    """The rank >= 3 procedures reject rank 2; use decide_rank2."""


ADJOINT = "adjoint"
SIMPLY_CONNECTED = "simply_connected"
_ISOGENY_ALIASES = {
    "adjoint": ADJOINT,
    "adj": ADJOINT,
    "simply_connected": SIMPLY_CONNECTED,
    "sc": SIMPLY_CONNECTED,
}


def parse_isogeny(s: str) -> str:
    try:
        return _ISOGENY_ALIASES[s.strip().lower()]
    except KeyError:
        raise GroupError(f"unknown isogeny tag {s!r}") from None


@dataclass(frozen=True)
class QuaternionAlgebra:
    """The quaternion algebra (a, b) over Q; ramified at v iff (a,b)_v = -1."""

    a: Fraction
    b: Fraction

    def __post_init__(self):
        if self.a == 0 or self.b == 0:
            raise GroupError("quaternion parameters must be nonzero")

    @staticmethod
    def of(a: Rational, b: Rational) -> "QuaternionAlgebra":
        return QuaternionAlgebra(Fraction(a), Fraction(b))

    def is_ramified(self, v: Place) -> bool:
        return hilbert(self.a, self.b, v) == -1

    def ramification_set(self) -> list[Place]:
        return [v for v in support_places([self.a, self.b])
                if self.is_ramified(v)]

    def is_globally_split(self) -> bool:
        return not self.ramification_set()


@dataclass(frozen=True)
class GroupB:
    """SO(q) for q of odd dimension n = 2l + 1 >= 5."""

    q: DiagForm
    isogeny: str = ADJOINT

    def __post_init__(self):
        if self.q.dim % 2 == 0 or self.q.dim < 5:
            raise GroupError("type B needs an odd-dimensional form, dim >= 5")
        if self.isogeny not in (ADJOINT, SIMPLY_CONNECTED):
            raise GroupError(f"bad isogeny tag {self.isogeny!r}")

    @property
    def rank(self) -> int:
        return (self.q.dim - 1) // 2

    def local_rank(self, v: Place) -> int:
        return witt_index(self.q, v)[0]

    def support(self) -> list[Place]:
        return self.q.support()


@dataclass(frozen=True)
class GroupC:
    """SU(h) for a diagonal hermitian form h over a quaternion algebra with
    its canonical involution; over a split algebra this is the split Sp_{2l}
    regardless of h (there is one class of nondegenerate skew forms)."""

    algebra: QuaternionAlgebra
    h: tuple[Fraction, ...]
    isogeny: str = SIMPLY_CONNECTED

    def __post_init__(self):
        if len(self.h) < 2:
            raise GroupError("type C needs rank >= 2")
        for c in self.h:
            if c == 0:
                raise GroupError("hermitian diagonal entries must be nonzero")
        if self.isogeny not in (ADJOINT, SIMPLY_CONNECTED):
            raise GroupError(f"bad isogeny tag {self.isogeny!r}")

    @staticmethod
    def of(a: Rational, b: Rational, h: Sequence[Rational],
           isogeny: str = SIMPLY_CONNECTED) -> "GroupC":
        return GroupC(QuaternionAlgebra.of(a, b),
                      tuple(Fraction(c) for c in h), isogeny)

    @property
    def rank(self) -> int:
        return len(self.h)

    def signature(self) -> tuple[int, int]:
        pos = sum(1 for c in self.h if c > 0)
        return pos, self.rank - pos

    def local_rank(self, v: Place) -> int:
        if not self.algebra.is_ramified(v):
            return self.rank
        if v.is_finite:
            return self.rank // 2
        pos, neg = self.signature()
        return min(pos, neg)

    def support(self) -> list[Place]:
        return support_places([self.algebra.a, self.algebra.b] + list(self.h))


SPLIT = "split"
ANISOTROPIC = "anisotropic"
INTERMEDIATE = "intermediate"


@dataclass(frozen=True)
class LocalStatus:
    place: Place
    rank1: int
    rank2: int
    status1: str
    status2: str

    @property
    def twin_ok(self) -> bool:
        pair = (self.status1, self.status2)
        return pair == (SPLIT, SPLIT) or pair == (ANISOTROPIC, ANISOTROPIC)

    def to_json(self) -> dict:
        return {"place": str(self.place), "rank1": self.rank1,
                "rank2": self.rank2, "status": [self.status1, self.status2]}


def _status(rank: int, full_rank: int, v: Place) -> str:
    if rank == full_rank:
        return SPLIT
    if rank == 0:
        # a type B/C group is never anisotropic at a finite place
        if v.is_finite:
            raise AssertionError("finite-place anisotropy is impossible here")
        return ANISOTROPIC
    return INTERMEDIATE


def local_certificate(g1: GroupB, g2: GroupC) -> list[LocalStatus]:
    """Ranks and statuses of both groups at every place of the joint support
    set, real place first then primes ascending.  Off-support places are
    split for both groups and are omitted."""
    if g1.rank != g2.rank:
        raise GroupError("rank mismatch")
    places = sorted(set(g1.support()) | set(g2.support()))
    out = []
    for v in places:
        r1, r2 = g1.local_rank(v), g2.local_rank(v)
        out.append(LocalStatus(v, r1, r2, _status(r1, g1.rank, v),
                               _status(r2, g2.rank, v)))
    return out


def is_twin(g1: GroupB, g2: GroupC) -> tuple[bool, list[LocalStatus]]:
    """Twin test: simultaneously split or anisotropic at every place."""
    cert = local_certificate(g1, g2)
    return all(st.twin_ok for st in cert), cert


def first_failure(cert: list[LocalStatus]) -> Optional[LocalStatus]:
    return next((st for st in cert if not st.twin_ok), None)


def _require_rank3(g1: GroupB, g2: GroupC, op: str) -> None:
    if g1.rank != g2.rank:
        raise GroupError("rank mismatch")
    if g1.rank == 2:
        raise RankTwoError(
            f"{op} requires rank >= 3; for rank 2 use decide_rank2 "
            "(5-dimensional forms)")


def weakly_commensurable(g1: GroupB, g2: GroupC,
                         s_places: Sequence[Place]) -> tuple[bool, list[LocalStatus]]:
    """S-arithmetic weak commensurability, decided through the twin test.

    S must contain the real place and may not contain a finite place where
    either group is anisotropic (vacuous over Q for types B and C, but
    validated)."""
    _require_rank3(g1, g2, "weakly_commensurable")
    s_set = set(s_places)
    if REAL_PLACE not in s_set:
        raise GroupError("S must contain the real place")
    # finite anisotropy cannot occur for these types; local_certificate
    # asserts that, so containment is vacuously fine once ranks are checked
    return is_twin(g1, g2)


def same_isogeny_tori(g1: GroupB, g2: GroupC) -> tuple[bool, list[LocalStatus]]:
    """Same isogeny classes of maximal tori over Q (rank >= 3): the twin test."""
    _require_rank3(g1, g2, "same_isogeny_tori")
    return is_twin(g1, g2)


def same_isomorphism_tori(g1: GroupB, g2: GroupC) -> tuple[bool, list[LocalStatus]]:
    """Same isomorphism classes of maximal tori over Q (rank >= 3): twins
    with g1 adjoint and g2 simply connected."""
    _require_rank3(g1, g2, "same_isomorphism_tori")
    twin, cert = is_twin(g1, g2)
    return (twin and g1.isogeny == ADJOINT
            and g2.isogeny == SIMPLY_CONNECTED), cert


# ---------------------------------------------------------------------------
# Rank 2: B_2 = C_2, decided on 5-dimensional quadratic forms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Rank2Certificate:
    similar: bool
    scalar: Optional[Fraction]
    places: list[tuple[Place, int, int]]  # (place, witt1, witt2)
    dichotomy_ok: bool

    def to_json(self) -> dict:
        return {
            "similar": self.similar,
            "scalar": str(self.scalar) if self.scalar is not None else None,
            "places": [{"place": str(v), "witt1": w1, "witt2": w2}
                       for v, w1, w2 in self.places],
            "local_dichotomy": self.dichotomy_ok,
        }


def decide_rank2(q1: DiagForm, q2: DiagForm) -> tuple[bool, Rank2Certificate]:
    """SO(q1) and Spin(q2) have the same isomorphism classes of maximal tori
    iff q1 is similar to q2 and, at every completion, both forms are split
    (Witt index 2) or both anisotropic (only possible at the real place)."""
    if q1.dim != 5 or q2.dim != 5:
        raise GroupError("decide_rank2 needs two 5-dimensional forms")
    sim, lam = similar_odd(q1, q2)
    places = sorted(set(q1.support()) | set(q2.support()))
    table = []
    dich = True
    for v in places:
        w1, w2 = witt_index(q1, v)[0], witt_index(q2, v)[0]
        table.append((v, w1, w2))
        both_split = w1 == 2 and w2 == 2
        both_anis = v.is_real and w1 == 0 and w2 == 0
        if not (both_split or both_anis):
            dich = False
    cert = Rank2Certificate(sim, lam, table, dich)
    return sim and dich, cert


# ---------------------------------------------------------------------------
# Geometric length-spectrum ratio
# ---------------------------------------------------------------------------

def length_ratio(n: int) -> Fraction:
    """The radicand of the scaling factor between the rational length spectra
    of twin quotients of the symmetric spaces of SO(n+1, n) and Sp_2n:
    lambda = sqrt((2n + 2) / (2n - 1)), returned as the exact radicand."""
    if n < 3:
        raise GroupError("length_ratio needs n >= 3")
    rad = Fraction(2 * n + 2, 2 * n - 1)
    num_sq = math.isqrt(rad.numerator) ** 2 == rad.numerator
    den_sq = math.isqrt(rad.denominator) ** 2 == rad.denominator
    if num_sq and den_sq:
        raise AssertionError("radicand unexpectedly a perfect square")
    return rad


def length_ratio_decimal(n: int, digits: int = 4) -> str:
    rad = length_ratio(n)
    return f"{math.sqrt(rad):.{digits}f}"


# ---------------------------------------------------------------------------
# Abstract local data: the twin test over an unspecified number field
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AbstractPlaceData:
    """User-supplied local data at one place of an abstract number field.

    For the B group either a Witt index or a signature (real places); for
    the C group a ramification flag plus, at real ramified places, the
    signature of the hermitian form.  Optional per-place Hasse invariant of
    the B form, used only for the product-formula consistency check.
    """

    name: str
    real: bool
    b_witt: Optional[int] = None
    b_signature: Optional[tuple[int, int]] = None
    c_ramified: bool = False
    c_signature: Optional[tuple[int, int]] = None
    b_hasse: Optional[int] = None


class LocalDataError(GroupError):
    """Inconsistent abstract local data (product formula violation)."""


def is_twin_abstract(places: Sequence[AbstractPlaceData],
                     rank: int) -> tuple[bool, list[dict]]:
    """Twin decision from user-supplied per-place data; places not listed
    default to split for both groups, so the listed set must contain every
    non-split place of either group.

    Consistency requirements: the set of C-ramified places has even
    cardinality, and if Hasse invariants of the B form are supplied for all
    listed places their product is +1 (off-list places are +1).
    """
    if rank < 2:
        raise GroupError("rank must be >= 2")
    names = [p.name for p in places]
    if len(set(names)) != len(names):
        raise LocalDataError("duplicate place names")
    ram = [p.name for p in places if p.c_ramified]
    if len(ram) % 2 != 0:
        raise LocalDataError(
            f"ramification set {ram} has odd cardinality, violating the "
            "even-parity product formula for quaternion algebras")
    hasse_vals = [p.b_hasse for p in places if p.b_hasse is not None]
    if hasse_vals and len(hasse_vals) == len(places):
        prod = 1
        for hv in hasse_vals:
            prod *= hv
        if prod != 1:
            raise LocalDataError(
                "Hasse invariants of the B form multiply to -1 over the "
                "listed places (off-list places are +1)")
    cert = []
    twin = True
    for p in places:
        r1 = _abstract_rank_b(p, rank)
        r2 = _abstract_rank_c(p, rank)
        st1 = SPLIT if r1 == rank else (ANISOTROPIC if (r1 == 0 and p.real)
                                        else INTERMEDIATE)
        st2 = SPLIT if r2 == rank else (ANISOTROPIC if (r2 == 0 and p.real)
                                        else INTERMEDIATE)
        ok = (st1, st2) in ((SPLIT, SPLIT), (ANISOTROPIC, ANISOTROPIC))
        twin = twin and ok
        cert.append({"place": p.name, "rank1": r1, "rank2": r2,
                     "status": [st1, st2]})
    return twin, cert


def _abstract_rank_b(p: AbstractPlaceData, rank: int) -> int:
    if p.b_witt is not None:
        if not 0 <= p.b_witt <= rank:
            raise LocalDataError(f"B Witt index out of range at {p.name}")
        if p.b_witt == 0 and not p.real:
            raise LocalDataError(
                f"B anisotropic at finite place {p.name}: impossible")
        return p.b_witt
    if p.b_signature is not None:
        if not p.real:
            raise LocalDataError(f"signature given at finite place {p.name}")
        pos, neg = p.b_signature
        if pos + neg != 2 * rank + 1:
            raise LocalDataError(f"B signature dimension mismatch at {p.name}")
        return min(pos, neg)
    return rank  # default split


def _abstract_rank_c(p: AbstractPlaceData, rank: int) -> int:
    if not p.c_ramified:
        return rank
    if not p.real:
        return rank // 2
    if p.c_signature is None:
        raise LocalDataError(
            f"ramified real place {p.name} needs the hermitian signature")
    pos, neg = p.c_signature
    if pos + neg != rank:
        raise LocalDataError(f"C signature dimension mismatch at {p.name}")
    return min(pos, neg)
