"""Maximal tori, quadratic form invariants, and the twins criterion for
almost simple groups of types B and C over Q."""

from .symbols import (
    Place,
    REAL_PLACE,
    factor,
    hilbert,
    legendre,
    square_class,
)
from .qforms import (
    DiagForm,
    FormInvariants,
    diagonalize,
    equivalent,
    invariants,
    is_isotropic_global,
    similar_odd,
    witt_index,
)
from .etale import (
    AlgebraElement,
    EtaleInvolutionAlgebra,
    NumberFieldFactor,
    RealType,
    append_fixed,
    check_dimension_condition,
    lemma_form,
    real_type,
    split_off_fixed,
    transfer_form,
    unitary_lemma_form,
)
from .tori import (
    RealFormSpec,
    classify_rank,
    lattice_type,
    same_tori_real,
    torus_types,
    torus_types_b,
    torus_types_c,
)
from .groups import (
    GroupB,
    GroupC,
    QuaternionAlgebra,
    decide_rank2,
    is_twin,
    is_twin_abstract,
    length_ratio,
    same_isogeny_tori,
    same_isomorphism_tori,
    weakly_commensurable,
)
from .embed import (
    OrthogonalTarget,
    SymplecticTarget,
    UnitaryTarget,
    correspond_b_to_c,
    correspond_c_to_b,
    embed_orthogonal_quasisplit_even,
    embed_orthogonal_split,
    embed_symplectic,
    embed_unitary_quasisplit,
    embeds_globally,
    real_embeddable,
)

__version__ = "0.1.0"
