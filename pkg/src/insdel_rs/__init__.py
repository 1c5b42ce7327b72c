"""Reed-Solomon codes that correct n - 2k + 1 adversarial insertions and deletions.

Exact finite-field arithmetic, the V_{I,J} non-singularity criterion, the
three evaluation-point constructions and a brute-force alignment decoder.
"""

from .channel import DecodeResult, adversary_search, decode, run_trials, transmit
from .criterion import (
    VerificationReport,
    agreement_count,
    build_matrix,
    determinant,
    find_disjoint_pair,
    increasing_vectors,
    symbolic_determinant,
    unique_monomial,
    verify_code,
    verify_ring_code,
)
from .finite_field import (
    FieldElement,
    FieldSpec,
    RingPoly,
    find_irreducible,
    make_extension_field,
    make_prime_field,
)
from .rs_code import MessagePoly, RSCodeSpec, correction_radius, encode, interpolate, rate_report
from .sequence_metrics import Delete, Insert, apply_edits, edit_distance, enumerate_edit_scripts, lcs

__version__ = "0.1.0"

__all__ = [
    "DecodeResult",
    "Delete",
    "FieldElement",
    "FieldSpec",
    "Insert",
    "MessagePoly",
    "RSCodeSpec",
    "RingPoly",
    "VerificationReport",
    "adversary_search",
    "agreement_count",
    "apply_edits",
    "build_matrix",
    "correction_radius",
    "decode",
    "determinant",
    "edit_distance",
    "encode",
    "enumerate_edit_scripts",
    "find_disjoint_pair",
    "find_irreducible",
    "increasing_vectors",
    "interpolate",
    "lcs",
    "make_extension_field",
    "make_prime_field",
    "rate_report",
    "run_trials",
    "symbolic_determinant",
    "transmit",
    "unique_monomial",
    "verify_code",
    "verify_ring_code",
]
