"""Exact decision procedures for transverse contact structures and
transverse foliations on oriented Seifert fibered 3-manifolds."""

from .seifert import SeifertData, normalize, euler_number, e_zero, gamma_vector
from .decide import (
    admits_invariant_transverse_contact,
    admits_transverse_contact,
    admits_transverse_foliation,
)
from .realizability import RealizabilityCertificate, is_realizable, verify_certificate

__all__ = [
    "SeifertData",
    "normalize",
    "euler_number",
    "e_zero",
    "gamma_vector",
    "admits_transverse_contact",
    "admits_transverse_foliation",
    "admits_invariant_transverse_contact",
    "RealizabilityCertificate",
    "is_realizable",
    "verify_certificate",
]
