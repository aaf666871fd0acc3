"""Gao's decoder for spectrally coded Reed-Solomon words.

Interpolate the received word, run the extended Euclidean algorithm on
``x^n - 1`` and the interpolant until the remainder drops below ``(n+k)/2``,
then divide remainder by multiplier.
"""

from __future__ import annotations

from typing import Sequence

from .code import CodeParams, Method, encode_spectral, hamming_distance
from .poly import (
    Poly,
    deg,
    make_monic,
    partial_euclid,
    poly_divmod,
    poly_mul,
    poly_sub,
    poly_mod,
    x_pow_minus_one,
)
from .result import DecodeResult, FailureReason
from .transform import idft


def gao_bound(C: CodeParams) -> int:
    # deg P < (n+k)/2  <=>  deg P < ceil((n+k)/2) for integer degrees
    return (C.n + C.k + 1) // 2


def congruence_residual(C: CodeParams, T: Sequence[int], W: Sequence[int], P: Sequence[int]) -> Poly:
    """``(W*T - P) mod (x^n - 1)``; zero for every pair the Euclid step returns."""
    F = C.field
    return poly_mod(F, poly_sub(F, poly_mul(F, W, T), P), x_pow_minus_one(F, C.n))


def decode_gao(C: CodeParams, received: Sequence[int]) -> DecodeResult:
    C.require(Method.SPECTRAL)
    F = C.field
    received = list(received)
    T = idft(F, received)
    P, W = partial_euclid(F, x_pow_minus_one(F, C.n), T, gao_bound(C))
    trace = {"T": T, "P": P, "W": W}
    M, rem = poly_divmod(F, P, W)
    if rem:
        return DecodeResult.failure(FailureReason.NONZERO_REMAINDER, **trace)
    if deg(M) >= C.k:
        return DecodeResult.failure(FailureReason.DEGREE_OVERFLOW, **trace)
    message = M + [0] * (C.k - len(M))
    codeword = encode_spectral(C, message)
    if hamming_distance(codeword, received) > C.t:
        return DecodeResult.failure(FailureReason.DISTANCE_EXCEEDED, **trace)
    return DecodeResult(
        message=message,
        codeword=codeword,
        error_locator=make_monic(F, W),
        corrected_positions=frozenset(i for i, (a, b) in enumerate(zip(codeword, received)) if a != b),
        trace=trace,
    )
