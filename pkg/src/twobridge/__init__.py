"""Exact invariants of 2-bridge knots.

Canonical slopes and their even continued fraction expansions, the
equivariant genera of all marked strong inversions, the Kakimizu
complex with its involution actions, and a golden catalog of 2-bridge
knots up to 10 crossings.
"""

from .slopes import (
    EvenCF,
    Slope,
    SlopeError,
    canonical_slopes,
    canonicalize_slope,
    evaluate_cf,
    expand_even_cf,
    format_cf,
    inverse_slope,
    parse_cf,
    slope_predicates,
)
from .genera import (
    Arc,
    GenusProfile,
    Inversion,
    MarkedClass,
    MarkedClassError,
    SymmetryType,
    classify_marked_classes,
    equivariant_genus,
    find_arc_gap_example,
    find_gap_example,
    genus_profile,
    seifert_genus,
)
from .kakimizu import (
    EnumerationBoundError,
    HopfSublattice,
    QuotientComplex,
    apply_sink_move,
    build_full_complex,
    build_quotient_complex,
    build_quotient_complex_via_cube,
    enumerate_cycles,
    hopf_set,
    involution_h_report,
    involution_hprime_report,
    move_vectors,
    oracle_cross_check,
    sinks,
    triangulation_volume,
)
from .catalog import (
    CatalogError,
    KnotRecord,
    compute_catalog,
    compute_record,
    load_catalog,
    parse_fraction,
    render_table,
    verify_catalog,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
