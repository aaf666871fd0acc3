"""Evaluation and interpolation over GF(q).

All transforms are the plain O(n^2) sums. Lengths of at least
``VECTOR_MIN_N`` take a numpy path that computes the same sums in bulk.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .errors import BadLength, DuplicateNode
from .gf import FieldParams
from .poly import Poly, poly_eval, poly_mul, scalar_mul, poly_add, trim

VECTOR_MIN_N = 256
_CHUNK = 1 << 20


def _check_length(F: FieldParams, n: int) -> None:
    if n != F.order:
        raise BadLength(f"transform length must be q-1 = {F.order}, got {n}")


def _dft_scalar(F: FieldParams, coeffs: Sequence[int], sign: int) -> list[int]:
    n = F.order
    exp, log = F.exp_table, F.log_table
    terms = [(j, log[c]) for j, c in enumerate(coeffs) if c]
    out = []
    add = F.add
    for i in range(n):
        acc = 0
        step = (sign * i) % n
        for j, lc in terms:
            acc = add(acc, exp[(lc + step * j) % n])
        out.append(acc)
    return out


@lru_cache(maxsize=8)
def _index_products(n: int) -> np.ndarray:
    i = np.arange(n, dtype=np.int64)
    return np.outer(i, i) % n


def _dft_numpy(F: FieldParams, coeffs: Sequence[int], sign: int) -> list[int]:
    n = F.order
    c = np.zeros(n, dtype=np.int64)
    c[: len(coeffs)] = coeffs
    nz = np.nonzero(c)[0]
    if nz.size == 0:
        return [0] * n
    logc = F.log_np[c[nz]]
    ij = _index_products(n)[:, nz]
    out = np.empty(n, dtype=np.int64)
    rows = max(1, _CHUNK // nz.size)
    for start in range(0, n, rows):
        e = (logc[None, :] + sign * ij[start : start + rows]) % n
        out[start : start + rows] = F.vec_sum(F.exp_np[e], axis=1)
    return out.tolist()


def _dft(F: FieldParams, coeffs: Sequence[int], sign: int) -> list[int]:
    if F.order >= VECTOR_MIN_N:
        return _dft_numpy(F, coeffs, sign)
    return _dft_scalar(F, coeffs, sign)


def dft(F: FieldParams, f: Sequence[int], n: int | None = None) -> list[int]:
    """Values ``f(alpha^i)`` for i in [0, n)."""
    n = F.order if n is None else n
    _check_length(F, n)
    f = trim(f)
    if len(f) > n:
        raise BadLength(f"deg f = {len(f) - 1} must be < n = {n}")
    return _dft(F, f, 1)


def idft(F: FieldParams, values: Sequence[int]) -> Poly:
    """The unique T with deg T < n and ``T(alpha^i) = values[i]``."""
    _check_length(F, len(values))
    n_inv = F.inv(F.from_int(F.order))
    return scalar_mul(F, n_inv, _dft(F, values, -1))


def lagrange_interpolate(F: FieldParams, points: Iterable[tuple[int, int]]) -> Poly:
    points = list(points)
    xs = [x for x, _ in points]
    if len(set(xs)) != len(xs):
        raise DuplicateNode("interpolation nodes must be distinct")
    master: Poly = [1]
    for x in xs:
        master = poly_mul(F, master, [F.neg(x), 1])
    out: Poly = []
    for j, (xj, yj) in enumerate(points):
        if not yj:
            continue
        basis = _deflate(F, master, xj)
        denom = 1
        for i, xi in enumerate(xs):
            if i != j:
                denom = F.mul(denom, F.sub(xj, xi))
        out = poly_add(F, out, scalar_mul(F, F.div(yj, denom), basis))
    return out


def _deflate(F: FieldParams, f: Sequence[int], root: int) -> Poly:
    """``f / (x - root)`` by synthetic division; root must be a root of f."""
    quo = [0] * (len(f) - 1)
    acc = 0
    for i in range(len(f) - 1, 0, -1):
        acc = F.add(F.mul(acc, root), f[i])
        quo[i - 1] = acc
    return quo


def chien_roots(F: FieldParams, W: Sequence[int], index_lo: int, index_hi: int) -> list[tuple[int, int]]:
    """``(j, alpha^j)`` for every j in [index_lo, index_hi] with W(alpha^j) = 0."""
    out = []
    for j in range(index_lo, index_hi + 1):
        z = F.alpha_pow(j)
        if poly_eval(F, W, z) == 0:
            out.append((j, z))
    return out
