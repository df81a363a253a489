"""Centralizers of involutions in Coxeter groups, via conjugation certificates.

For any involution w the library computes a pair (I, u) with u w u^-1 the
longest element of a (-1)-type standard parabolic W_I, so that
Z_W(w) = u^-1 N_W(W_I) u; on finite groups the identity is verified against
brute-force centralizers and normalizers.  All arithmetic is exact.
"""

from .scalar import AlgebraicScalar, FieldContext
from .group import (
    CoxeterContext,
    GroupElement,
    MixedSignRootError,
    Root,
    word_from_string,
    word_to_string,
)
from .involution import (
    InvolutionCertificate,
    involution_certificate,
    is_finite_parabolic,
    is_involution,
    is_minus_one_type,
    longest_element,
    negated_simples,
)
from .finite import (
    DEFAULT_ENUMERATION_CAP,
    ElementSet,
    EnumerationCapExceeded,
    centralizer,
    enumerate_group,
    involution_classes,
    normalizer,
    verify_centralizer_certificate,
    verify_centralizer_is_normalizer,
)
from . import catalog

__all__ = [
    "AlgebraicScalar",
    "FieldContext",
    "CoxeterContext",
    "GroupElement",
    "MixedSignRootError",
    "Root",
    "word_from_string",
    "word_to_string",
    "InvolutionCertificate",
    "involution_certificate",
    "is_finite_parabolic",
    "is_involution",
    "is_minus_one_type",
    "longest_element",
    "negated_simples",
    "DEFAULT_ENUMERATION_CAP",
    "ElementSet",
    "EnumerationCapExceeded",
    "centralizer",
    "enumerate_group",
    "involution_classes",
    "normalizer",
    "verify_centralizer_certificate",
    "verify_centralizer_is_normalizer",
    "catalog",
]
