"""Finite constellations, D-inverse constellations, constellations with
range, (ordered) categories and groupoids, and the semigroup constructions
that produce them: axiom checkers with witnesses, conversions, Cayley
embeddings and exhaustive small-order enumeration."""
from .core import (
    KINDS,
    Bundle,
    CheckReport,
    ConstelError,
    InputError,
    ParseError,
    ResourceError,
    StructureError,
    Violation,
    canonical_form,
    canonical_key,
    find_isomorphism,
    load_bundle,
    make_bundle,
    parse_bundle,
    save_bundle,
    serialize_bundle,
)
from .constellations import (
    check_constellation,
    check_radiant,
    check_range,
    is_D_inverse,
    is_D_regular,
    is_normal,
    is_right_cancellative,
    is_strongly_right_cancellative,
)
from .ordered import check_category, check_groupoid, check_ordered_category, check_ordered_groupoid
from .correspondence import C_of, Q_of, from_ordered_groupoid, roundtrip_check, to_ordered_groupoid
from .representations import build_CX, build_IX, build_symmetric_inverse_monoid, cayley_radiant, inv2inv
from .semigroups import build_I_E_T, is_T_normal, lawson, nambooripad
from .preconstellations import check_cond12, is_inverse_pre, reconstruct_D, reduct
from .enumeration import EnumerationTask, count_structures, enumerate_structures, iter_structures

__version__ = "0.1.0"

__all__ = [
    "KINDS",
    "Bundle",
    "CheckReport",
    "ConstelError",
    "InputError",
    "ParseError",
    "ResourceError",
    "StructureError",
    "Violation",
    "canonical_form",
    "canonical_key",
    "find_isomorphism",
    "load_bundle",
    "make_bundle",
    "parse_bundle",
    "save_bundle",
    "serialize_bundle",
    "check_constellation",
    "check_radiant",
    "check_range",
    "is_D_inverse",
    "is_D_regular",
    "is_normal",
    "is_right_cancellative",
    "is_strongly_right_cancellative",
    "check_category",
    "check_groupoid",
    "check_ordered_category",
    "check_ordered_groupoid",
    "C_of",
    "Q_of",
    "from_ordered_groupoid",
    "roundtrip_check",
    "to_ordered_groupoid",
    "build_CX",
    "build_IX",
    "build_symmetric_inverse_monoid",
    "cayley_radiant",
    "inv2inv",
    "build_I_E_T",
    "is_T_normal",
    "lawson",
    "nambooripad",
    "check_cond12",
    "is_inverse_pre",
    "reconstruct_D",
    "reduct",
    "EnumerationTask",
    "count_structures",
    "enumerate_structures",
    "iter_structures",
]
