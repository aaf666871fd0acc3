"""Reed-Solomon codec over GF(p^m) with three cross-checked decoders."""

from .code import CodeParams, ErrorPattern, Method, apply_errors, encode, encode_spectral, encode_systematic
from .gao import decode_gao
from .gf import FieldParams, make_field
from .gs_oracle import decode_gs
from .result import DecodeResult, FailureReason
from .wb import decode_wb

__all__ = [
    "CodeParams",
    "DecodeResult",
    "ErrorPattern",
    "FailureReason",
    "FieldParams",
    "Method",
    "apply_errors",
    "decode_gao",
    "decode_gs",
    "decode_wb",
    "encode",
    "encode_spectral",
    "encode_systematic",
    "make_field",
]
