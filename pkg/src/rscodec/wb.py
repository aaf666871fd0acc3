"""Welch-Berlekamp remainder decoding for systematically coded words.

The key equation ``p_j alpha^j N(alpha^j) = s_j W_m(alpha^j)``, j in [0, d-2],
ties the syndrome coefficients to a message-part error locator ``W_m``. It is
solved by interpolating ``L(alpha^j) = s_j / (p_j alpha^j)`` and running the
extended Euclidean algorithm on the node polynomial and ``L``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .code import CodeParams, Method, encode_systematic, hamming_distance
from .errors import BadLocator, InternalError, KeyEquationError, RepeatedRoot
from .poly import (
    Poly,
    deg,
    euclid_steps,
    formal_derivative,
    from_roots,
    lead,
    poly_divmod,
    poly_eval,
    poly_mod,
    scalar_mul,
)
from .result import DecodeResult, FailureReason
from .transform import chien_roots, lagrange_interpolate


@dataclass(frozen=True)
class KeyEquationSolution:
    N: Poly
    W_m: Poly


def syndrome(C: CodeParams, R: Sequence[int]) -> Poly:
    """``R mod g``, coefficients s_0 .. s_{d-2} (trailing zeros trimmed)."""
    C.require(Method.REMAINDER)
    return poly_mod(C.field, list(R), C.g)


def p_poly(C: CodeParams) -> Poly:
    """``g(x) / (x - alpha^b)``; every coefficient is nonzero for RS codes."""
    F = C.field
    p, rem = poly_divmod(F, C.g, [F.neg(F.alpha_pow(C.b)), 1])
    if rem:
        raise InternalError("alpha^b is not a root of g")
    if len(p) != C.d - 1 or any(c == 0 for c in p):
        raise InternalError("p(x) has a zero coefficient")
    return p


def node_poly(C: CodeParams) -> Poly:
    """``prod_{j=0}^{d-2} (x - alpha^j)``, the modulus of the interpolated key equation.

    Coincides with g(x) when b = 0.
    """
    F = C.field
    return from_roots(F, [F.alpha_pow(j) for j in range(C.d - 1)])


def build_L(C: CodeParams, S: Sequence[int], p: Sequence[int] | None = None) -> Poly:
    F = C.field
    p = p_poly(C) if p is None else p
    s = list(S) + [0] * (C.d - 1 - len(S))
    points = [(F.alpha_pow(j), F.div(s[j], F.mul(p[j], F.alpha_pow(j)))) for j in range(C.d - 1)]
    return lagrange_interpolate(F, points)


def key_equation_bound(C: CodeParams) -> int:
    # 2 deg N < d - 1  <=>  deg N < ceil((d-1)/2)
    return C.d // 2


def solve_key_equation(C: CodeParams, L: Sequence[int], steps: list | None = None) -> KeyEquationSolution:
    """Partial Euclid on (node polynomial, L); returns N and monic W_m.

    If ``steps`` is a list, every visited Euclid step is appended to it.
    """
    F = C.field
    bound = key_equation_bound(C)
    for step in euclid_steps(F, node_poly(C), L):
        if steps is not None:
            steps.append(step)
        if deg(step.remainder) < bound:
            break
    N, W = step.remainder, step.multiplier
    scale = F.inv(lead(W))
    N, W = scalar_mul(F, scale, N), scalar_mul(F, scale, W)
    if not deg(N) < deg(W) <= (C.d - 1) // 2:
        raise KeyEquationError(f"deg N = {deg(N)}, deg W_m = {deg(W)} violate deg N < deg W_m <= (d-1)/2")
    return KeyEquationSolution(N, W)


def f_weight(C: CodeParams, Z: int) -> int:
    """``Z^-b * sum_i p_i alpha^(i(b+1)) / (alpha^i - Z)`` for a message-part locator Z."""
    F = C.field
    if Z == 0:
        raise BadLocator("zero is not a locator")
    j = F.log_table[Z]
    if j < C.d - 1:
        raise BadLocator(f"locator alpha^{j} lies in the parity part [0, {C.d - 2}]")
    p = p_poly(C)
    acc = 0
    for i, pi in enumerate(p):
        term = F.mul(pi, F.alpha_pow(i * (C.b + 1)))
        acc = F.add(acc, F.div(term, F.sub(F.alpha_pow(i), Z)))
    return F.mul(F.pow(Z, -C.b), acc)


def error_value(C: CodeParams, sol: KeyEquationSolution, Z: int) -> int:
    """``Y = f(Z) N(Z) / W_m'(Z)``."""
    F = C.field
    dW = poly_eval(F, formal_derivative(F, sol.W_m), Z)
    if dW == 0:
        raise RepeatedRoot(f"W_m' vanishes at {Z}")
    return F.mul(f_weight(C, Z), F.div(poly_eval(F, sol.N, Z), dW))


def key_equation_residuals(C: CodeParams, S: Sequence[int], sol: KeyEquationSolution) -> list[int]:
    """``p_j alpha^j N(alpha^j) - s_j W_m(alpha^j)`` for j in [0, d-2]."""
    F = C.field
    p = p_poly(C)
    s = list(S) + [0] * (C.d - 1 - len(S))
    out = []
    for j in range(C.d - 1):
        a = F.alpha_pow(j)
        lhs = F.mul(F.mul(p[j], a), poly_eval(F, sol.N, a))
        rhs = F.mul(s[j], poly_eval(F, sol.W_m, a))
        out.append(F.sub(lhs, rhs))
    return out


def decode_wb(C: CodeParams, R: Sequence[int], parity_roots: bool = False) -> DecodeResult:
    """Remainder decoding of ``R``.

    Roots of W_m are searched over the message part only, so errors confined
    to parity positions end in ``LocatorRootMismatch``. With
    ``parity_roots=True`` the search covers all n positions; roots in the
    parity part are left to the systematic re-encode, which makes the decoder
    correct every pattern of weight <= t.
    """
    C.require(Method.REMAINDER)
    F = C.field
    R = list(R)
    S = syndrome(C, R)
    if not S:
        return DecodeResult(
            message=R[C.d - 1 :],
            codeword=R,
            error_locator=[1],
            trace={"S": S, "N": [], "W_m": [1]},
        )
    p = p_poly(C)
    L = build_L(C, S, p)
    steps: list = []
    trace = {"S": S, "p": p, "L": L, "euclid": steps}
    try:
        sol = solve_key_equation(C, L, steps)
    except KeyEquationError:
        return DecodeResult.failure(FailureReason.KEY_EQUATION_UNSOLVABLE, **trace)
    trace.update(N=sol.N, W_m=sol.W_m)
    roots = chien_roots(F, sol.W_m, 0 if parity_roots else C.d - 1, C.n - 1)
    if len(roots) != deg(sol.W_m):
        return DecodeResult.failure(FailureReason.LOCATOR_ROOT_MISMATCH, **trace)
    corrected = list(R)
    try:
        for j, Z in roots:
            if j < C.d - 1:
                continue
            corrected[j] = F.sub(corrected[j], error_value(C, sol, Z))
    except RepeatedRoot:
        return DecodeResult.failure(FailureReason.LOCATOR_ROOT_MISMATCH, **trace)
    message = corrected[C.d - 1 :]
    codeword = encode_systematic(C, message)
    if hamming_distance(codeword, R) > C.t:
        return DecodeResult.failure(FailureReason.DISTANCE_EXCEEDED, **trace)
    return DecodeResult(
        message=message,
        codeword=codeword,
        error_locator=sol.W_m,
        corrected_positions=frozenset(i for i, (a, b) in enumerate(zip(codeword, R)) if a != b),
        trace=trace,
    )
