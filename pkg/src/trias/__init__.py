"""Exact computations with triassociative algebras in dimensions 1 and 2."""

__version__ = "0.1.0"

from .fields import QI, FieldDescriptor, FpElem, GaussRat, fp  # noqa: E402
from .algebra import (  # noqa: E402
    BasisChange,
    OpKind,
    Trialgebra,
    algebra_from_json,
    algebra_to_json,
    make_algebra,
    transport,
)
from .identities import AXIOMS, builtin_axioms, check_pack, is_triassociative, parse_identity  # noqa: E402

__all__ = [
    "__version__",
    "QI",
    "FieldDescriptor",
    "FpElem",
    "GaussRat",
    "fp",
    "BasisChange",
    "OpKind",
    "Trialgebra",
    "algebra_from_json",
    "algebra_to_json",
    "make_algebra",
    "transport",
    "AXIOMS",
    "builtin_axioms",
    "check_pack",
    "is_triassociative",
    "parse_identity",
]
