from codes.optimal import (
    ALL,
    Code,
    SizeReport,
    closed_form_size,
    code_from,
    construct_code,
    identity_params,
    optimal_code_size,
    resolve_radius,
    zchannel_middle_residue_size,
)
from codes.verification import VerifyReport, verify_code

__all__ = [
    "ALL",
    "Code",
    "SizeReport",
    "VerifyReport",
    "closed_form_size",
    "code_from",
    "construct_code",
    "identity_params",
    "optimal_code_size",
    "resolve_radius",
    "verify_code",
    "zchannel_middle_residue_size",
]
