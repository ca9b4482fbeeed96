"""Finite connected quandles: tables, canonical forms, enumeration."""

from .perm import (
    Perm,
    are_conjugate,
    compose,
    cycle_decomposition,
    cycle_notation,
    inverse,
    pattern,
    power,
)
from .quandle import (
    ColumnNotBijective,
    NotAGroup,
    NotConnected,
    NotIdempotent,
    NotRightDistributive,
    Quandle,
    QuandleError,
    check_formulas,
    conjugation_quandle,
    dihedral_quandle,
    dual,
    from_table,
    inner_transport,
    is_connected,
    is_latin,
    pattern_sequence,
    profile,
    right_translation,
    trivial_quandle,
)
from .canon import (
    NotNaturallyOrdered,
    OrderTooLarge,
    Reordering,
    all_natural_reorderings,
    apply_reordering,
    are_isomorphic,
    automorphism_group,
    automorphisms,
    block_form_perm,
    brute_force_automorphisms,
    brute_force_isomorphism,
    canonical_form,
    canonical_set,
    is_naturally_ordered,
    natural_reorderings_wrt,
    naturalize,
)
from .enumeration import census, enumerate_connected, filter_by_profile

__all__ = [name for name in dir() if not name.startswith("_")]
