"""Arithmetic in GF(p^m) backed by exp/log tables.

Elements are plain ints in ``[0, q)``. For ``m > 1`` an element is the base-p
digit vector of a residue polynomial modulo ``prim_poly``, lowest digit being
the constant term; for ``p = 2`` this is the usual bit layout.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

import numpy as np

from .errors import BadPolyDegree, DivideByZero, FieldError, NotPrime, NotPrimitive

MAX_Q = 1 << 16


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    i = 3
    while i * i <= p:
        if p % i == 0:
            return False
        i += 2
    return True


def _digits(v: int, p: int, m: int) -> list[int]:
    out = []
    for _ in range(m):
        v, r = divmod(v, p)
        out.append(r)
    return out


def _undigits(ds: Sequence[int], p: int) -> int:
    v = 0
    for d in reversed(ds):
        v = v * p + d
    return v


def _mul_mod_poly(a: int, b: int, p: int, m: int, prim: Sequence[int]) -> int:
    """Schoolbook product of two residues, reduced by the monic ``prim``."""
    da, db = _digits(a, p, m), _digits(b, p, m)
    prod = [0] * (2 * m - 1)
    for i, x in enumerate(da):
        if x:
            for j, y in enumerate(db):
                prod[i + j] = (prod[i + j] + x * y) % p
    for top in range(2 * m - 2, m - 1, -1):
        c = prod[top]
        if c:
            for j in range(m + 1):
                prod[top - m + j] = (prod[top - m + j] - c * prim[j]) % p
    return _undigits(prod[:m], p)


@dataclass(frozen=True, eq=False)
class FieldParams:
    """GF(q), q = p^m, with a verified primitive element ``alpha``.

    Build with :func:`make_field`; the tables are filled there.
    """

    p: int
    m: int
    prim_poly: tuple[int, ...]
    alpha: int
    exp_table: tuple[int, ...] = field(repr=False)
    log_table: tuple[int, ...] = field(repr=False)

    @property
    def q(self) -> int:
        return self.p**self.m

    @property
    def order(self) -> int:
        """Size of the multiplicative group, q - 1."""
        return len(self.exp_table)

    def __eq__(self, other):
        if not isinstance(other, FieldParams):
            return NotImplemented
        return (self.p, self.m, self.prim_poly, self.alpha) == (
            other.p,
            other.m,
            other.prim_poly,
            other.alpha,
        )

    def __hash__(self):
        return hash((self.p, self.m, self.prim_poly, self.alpha))

    # scalar ops

    def add(self, a: int, b: int) -> int:
        p = self.p
        if p == 2:
            return a ^ b
        if self.m == 1:
            return (a + b) % p
        out, scale = 0, 1
        while a or b:
            a, x = divmod(a, p)
            b, y = divmod(b, p)
            out += ((x + y) % p) * scale
            scale *= p
        return out

    def neg(self, a: int) -> int:
        p = self.p
        if p == 2:
            return a
        if self.m == 1:
            return (-a) % p
        out, scale = 0, 1
        while a:
            a, x = divmod(a, p)
            out += ((-x) % p) * scale
            scale *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        lg = self.log_table
        return self.exp_table[(lg[a] + lg[b]) % self.order]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivideByZero("inverse of zero")
        n = self.order
        return self.exp_table[(n - self.log_table[a]) % n]

    def div(self, a: int, b: int) -> int:
        if b == 0:
            raise DivideByZero("division by zero")
        if a == 0:
            return 0
        n = self.order
        lg = self.log_table
        return self.exp_table[(lg[a] - lg[b]) % n]

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise DivideByZero("negative power of zero")
            return 1 if e == 0 else 0
        n = self.order
        return self.exp_table[(self.log_table[a] * e) % n]

    def alpha_pow(self, i: int) -> int:
        return self.exp_table[i % self.order]

    def from_int(self, c: int) -> int:
        """Image of the integer ``c`` under Z -> GF(q) (c times the unit)."""
        return c % self.p

    def is_element(self, a) -> bool:
        return isinstance(a, (int, np.integer)) and 0 <= a < self.q

    # vectorized helpers (numpy int64 arrays of elements)

    @cached_property
    def exp_np(self) -> np.ndarray:
        return np.asarray(self.exp_table, dtype=np.int64)

    @cached_property
    def log_np(self) -> np.ndarray:
        return np.asarray(self.log_table, dtype=np.int64)

    def vec_sum(self, a: np.ndarray, axis: int = -1) -> np.ndarray:
        """Field sum of ``a`` along ``axis``."""
        p = self.p
        if p == 2:
            return np.bitwise_xor.reduce(a, axis=axis)
        if self.m == 1:
            return a.sum(axis=axis) % p
        out = np.zeros(np.delete(a.shape, axis % a.ndim), dtype=np.int64)
        scale = 1
        for _ in range(self.m):
            out += ((a // scale) % p).sum(axis=axis) % p * scale
            scale *= p
        return out

    def to_record(self) -> dict:
        return {
            "p": self.p,
            "m": self.m,
            "prim_poly": list(self.prim_poly),
            "alpha": self.alpha,
        }


def _build_tables(p: int, m: int, prim: Sequence[int], alpha: int):
    q = p**m
    exp = [1]
    if m == 1:
        step = lambda v: (v * alpha) % p  # noqa: E731
    else:
        step = lambda v: _mul_mod_poly(v, alpha, p, m, prim)  # noqa: E731
    v = step(1)
    while v != 1:
        if v == 0 or len(exp) >= q - 1:
            raise NotPrimitive(f"alpha={alpha} has order < {q - 1} (or prim_poly is reducible)")
        exp.append(v)
        v = step(v)
    if len(exp) != q - 1:
        raise NotPrimitive(f"alpha={alpha} has multiplicative order {len(exp)}, need {q - 1}")
    log = [0] * q
    for i, e in enumerate(exp):
        log[e] = i
    return tuple(exp), tuple(log)


def make_field(
    p: int,
    m: int = 1,
    prim_poly: Sequence[int] | None = None,
    alpha: int | None = None,
) -> FieldParams:
    """Construct GF(p^m).

    For ``m = 1`` pass ``alpha`` (a primitive root mod p); ``prim_poly`` is ignored.
    For ``m > 1`` pass the monic ``prim_poly`` as coefficients ``[c0, ..., cm]``;
    ``alpha`` defaults to the residue ``x`` (integer value ``p``).
    The order of alpha is checked to be exactly q - 1.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if m < 1:
        raise BadPolyDegree(f"extension degree must be >= 1, got {m}")
    q = p**m
    if q < 4:
        raise FieldError(f"q = {q} is too small (need q >= 4)")
    if q > MAX_Q:
        raise FieldError(f"q = {q} exceeds the supported maximum {MAX_Q}")
    if m == 1:
        if alpha is None:
            alpha = smallest_primitive_root(p)
        if not 0 < alpha < p:
            raise NotPrimitive(f"alpha={alpha} is not a nonzero element of GF({p})")
        prim = ()
    else:
        if prim_poly is None:
            raise BadPolyDegree("prim_poly is required for m > 1")
        prim = tuple(int(c) % p for c in prim_poly)
        while len(prim) > 1 and prim[-1] == 0:
            prim = prim[:-1]
        if len(prim) != m + 1:
            raise BadPolyDegree(f"prim_poly must have degree {m}, got {len(prim) - 1}")
        if prim[-1] != 1:
            raise BadPolyDegree("prim_poly must be monic")
        if alpha is None:
            alpha = p
        if not 0 < alpha < q:
            raise NotPrimitive(f"alpha={alpha} is not a nonzero element of GF({q})")
    exp, log = _build_tables(p, m, prim, alpha)
    return FieldParams(p, m, prim, alpha, exp, log)


def smallest_primitive_root(p: int) -> int:
    for g in range(2 if p > 2 else 1, p):
        try:
            _build_tables(p, 1, (), g)
        except NotPrimitive:
            continue
        return g
    raise NotPrimitive(f"no primitive root mod {p}")


def find_primitive_poly(p: int, m: int) -> list[int]:
    """Lexicographically smallest monic primitive polynomial of degree m over GF(p)."""
    if m == 1:
        return [(-smallest_primitive_root(p)) % p, 1]
    for v in range(p**m):
        lower = _digits(v, p, m)
        if lower[0] == 0:
            continue
        prim = lower + [1]
        try:
            _build_tables(p, m, prim, p)
        except NotPrimitive:
            continue
        return prim
    raise NotPrimitive(f"no primitive polynomial of degree {m} over GF({p})")


def field_from_record(rec: dict) -> FieldParams:
    return make_field(int(rec["p"]), int(rec.get("m", 1)), rec.get("prim_poly") or None, rec.get("alpha"))
