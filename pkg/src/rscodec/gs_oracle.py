"""Direct linear-algebra decoder used as an oracle for the Gao decoder.

For e = 0, 1, ... the pointwise key equation ``W(alpha^i) r_i = P(alpha^i)``
is written out as an n-row linear system in the coefficients of a monic W of
degree e and of P with deg P < k + e, and solved by Gaussian elimination.
Deliberately slow; it shares nothing with the Euclid path except the field
and the final division.
"""

from __future__ import annotations

from typing import NamedTuple, Sequence

from .code import CodeParams, Method, encode_spectral, hamming_distance
from .gf import FieldParams
from .poly import Poly, deg, poly_divmod, poly_eval, trim
from .result import DecodeResult, FailureReason


class Solution(NamedTuple):
    x: list[int]
    free: list[int]  # column indices left free (set from ``free_values`` or 0)


def gaussian_solve(
    F: FieldParams,
    A: Sequence[Sequence[int]],
    rhs: Sequence[int],
    free_values: dict[int, int] | None = None,
) -> Solution | None:
    """Solve ``A x = rhs`` over GF(q). Returns None when the system is inconsistent."""
    rows = [list(r) + [b] for r, b in zip(A, rhs)]
    ncols = len(A[0]) if A else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = F.inv(rows[r][c])
        rows[r] = [F.mul(inv, v) for v in rows[r]]
        prow = rows[r]
        for i in range(len(rows)):
            f = rows[i][c]
            if i != r and f:
                rows[i] = [F.sub(v, F.mul(f, w)) for v, w in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    if any(row[-1] for row in rows[r:]):
        return None
    free = [c for c in range(ncols) if c not in set(pivots)]
    x = [0] * ncols
    for c in free:
        x[c] = (free_values or {}).get(c, 0)
    for i, c in enumerate(pivots):
        acc = rows[i][-1]
        for f in free:
            acc = F.sub(acc, F.mul(rows[i][f], x[f]))
        x[c] = acc
    return Solution(x, free)


def key_equation_system(C: CodeParams, R: Sequence[int], e: int) -> tuple[list[list[int]], list[int]]:
    """Rows ``sum_l w_l a^l r_i - sum_m p_m a^m = -a^e r_i`` with a = alpha^i."""
    F = C.field
    A, rhs = [], []
    for i, r in enumerate(R):
        a = F.alpha_pow(i)
        row = [F.mul(r, F.alpha_pow(i * l)) for l in range(e)]
        row += [F.neg(F.alpha_pow(i * m)) for m in range(C.k + e)]
        A.append(row)
        rhs.append(F.neg(F.mul(r, F.pow(a, e))))
    return A, rhs


def solve_gs_system(
    C: CodeParams, R: Sequence[int], e: int, free_values: dict[int, int] | None = None
) -> tuple[Poly, Poly] | None:
    """``(W, P)`` from one particular solution at locator degree e, or None."""
    A, rhs = key_equation_system(C, R, e)
    sol = gaussian_solve(C.field, A, rhs, free_values)
    if sol is None:
        return None
    W = sol.x[:e] + [1]
    P = trim(sol.x[e:])
    return W, P


def pointwise_residuals(C: CodeParams, R: Sequence[int], W: Sequence[int], P: Sequence[int]) -> list[int]:
    F = C.field
    out = []
    for i, r in enumerate(R):
        a = F.alpha_pow(i)
        out.append(F.sub(F.mul(poly_eval(F, W, a), r), poly_eval(F, P, a)))
    return out


def decode_gs(C: CodeParams, R: Sequence[int], t_max: int | None = None) -> DecodeResult:
    C.require(Method.SPECTRAL)
    t_max = C.t if t_max is None else t_max
    if not 0 <= t_max <= C.t:
        raise ValueError(f"t_max must lie in [0, {C.t}], got {t_max}")
    R = list(R)
    for e in range(t_max + 1):
        found = solve_gs_system(C, R, e)
        if found is None:
            continue
        W, P = found
        M, rem = poly_divmod(C.field, P, W)
        if rem or deg(M) >= C.k:
            continue
        message = M + [0] * (C.k - len(M))
        codeword = encode_spectral(C, message)
        if hamming_distance(codeword, R) > C.t:
            continue
        return DecodeResult(
            message=message,
            codeword=codeword,
            error_locator=W,
            corrected_positions=frozenset(i for i, (a, b) in enumerate(zip(codeword, R)) if a != b),
            trace={"e": e, "W": W, "P": P},
        )
    return DecodeResult.failure(FailureReason.KEY_EQUATION_UNSOLVABLE)
