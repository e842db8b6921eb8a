"""Proof search and certificate checking for multi-modal substructural linear logics.

The heavy lifting lives in the C++ extension; this package re-exports it.
"""

from sellns._sellns import (
    Signature,
    axiom_matrix,
    check_certificate,
    interpret,
    normalize_context,
    normalize_formula,
    normalize_sequent,
    oracle_provable,
    prove,
    render_latex,
    restrict_upset,
)

__all__ = [
    "Signature",
    "axiom_matrix",
    "check_certificate",
    "interpret",
    "normalize_context",
    "normalize_formula",
    "normalize_sequent",
    "oracle_provable",
    "prove",
    "render_latex",
    "restrict_upset",
]

__version__ = "0.1.0"
