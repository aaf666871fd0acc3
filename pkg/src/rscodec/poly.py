"""Dense polynomials over GF(q) as canonical lists, lowest degree first.

The zero polynomial is ``[]`` and has degree ``-inf`` (:data:`NEG_INF`), so
that strict bounds like ``deg r < bound`` need no special case for zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import DivideByZero
from .gf import FieldParams

Poly = list[int]

NEG_INF = -math.inf


def trim(f: Sequence[int]) -> Poly:
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return f


def deg(f: Sequence[int]) -> float:
    f = trim(f) if f and f[-1] == 0 else f
    return len(f) - 1 if f else NEG_INF


def lead(f: Sequence[int]) -> int:
    return f[-1] if f else 0


def monomial(c: int, e: int) -> Poly:
    return [0] * e + [c] if c else []


def poly_add(F: FieldParams, f: Sequence[int], g: Sequence[int]) -> Poly:
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] = F.add(out[i], c)
    return trim(out)


def poly_neg(F: FieldParams, f: Sequence[int]) -> Poly:
    return [F.neg(c) for c in f]


def poly_sub(F: FieldParams, f: Sequence[int], g: Sequence[int]) -> Poly:
    return poly_add(F, f, poly_neg(F, g))


def scalar_mul(F: FieldParams, c: int, f: Sequence[int]) -> Poly:
    if c == 0:
        return []
    return trim([F.mul(c, x) for x in f])


def poly_mul(F: FieldParams, f: Sequence[int], g: Sequence[int]) -> Poly:
    if not f or not g:
        return []
    exp, log, n = F.exp_table, F.log_table, F.order
    out = [0] * (len(f) + len(g) - 1)
    lg = [(j, log[y]) for j, y in enumerate(g) if y]
    for i, x in enumerate(f):
        if not x:
            continue
        lx = log[x]
        for j, ly in lg:
            out[i + j] = F.add(out[i + j], exp[(lx + ly) % n])
    return trim(out)


def poly_divmod(F: FieldParams, f: Sequence[int], g: Sequence[int]) -> tuple[Poly, Poly]:
    """Return ``(quo, rem)`` with ``f = quo*g + rem`` and ``deg rem < deg g``."""
    g = trim(g)
    if not g:
        raise DivideByZero("polynomial division by zero")
    rem = trim(f)
    dg = len(g) - 1
    if len(rem) <= dg:
        return [], rem
    exp, log, n = F.exp_table, F.log_table, F.order
    inv_lead = F.inv(g[-1])
    lg = [(j, log[y]) for j, y in enumerate(g[:-1]) if y]
    quo = [0] * (len(rem) - dg)
    for top in range(len(rem) - 1, dg - 1, -1):
        c = rem[top]
        if not c:
            continue
        c = F.mul(c, inv_lead)
        quo[top - dg] = c
        rem[top] = 0
        lc = log[c]
        shift = top - dg
        for j, ly in lg:
            rem[shift + j] = F.sub(rem[shift + j], exp[(lc + ly) % n])
    return trim(quo), trim(rem[:dg])


def poly_mod(F: FieldParams, f: Sequence[int], g: Sequence[int]) -> Poly:
    return poly_divmod(F, f, g)[1]


def poly_eval(F: FieldParams, f: Sequence[int], x0: int) -> int:
    acc = 0
    for c in reversed(f):
        acc = F.add(F.mul(acc, x0), c)
    return acc


def formal_derivative(F: FieldParams, f: Sequence[int]) -> Poly:
    return trim([F.mul(F.from_int(i), f[i]) for i in range(1, len(f))])


def make_monic(F: FieldParams, f: Sequence[int]) -> Poly:
    if not f:
        return []
    return scalar_mul(F, F.inv(lead(f)), f)


def from_roots(F: FieldParams, roots: Sequence[int]) -> Poly:
    """Monic polynomial ``prod (x - r)``."""
    out: Poly = [1]
    for r in roots:
        out = poly_mul(F, out, [F.neg(r), 1])
    return out


def x_pow_minus_one(F: FieldParams, n: int) -> Poly:
    return [F.neg(1)] + [0] * (n - 1) + [1]


@dataclass(frozen=True)
class EuclidStep:
    remainder: Poly
    multiplier: Poly


def euclid_steps(F: FieldParams, a: Sequence[int], b: Sequence[int]) -> Iterator[EuclidStep]:
    """Remainder sequence of ``(a, b)`` with the Bezout multiplier of ``b``.

    Yields ``(r_j, v_j)`` for j = 0, 1, ... starting at ``(b, 1)`` and ending
    with the zero remainder; ``r_j == v_j * b (mod a)`` at every step.
    """
    r_prev, r_cur = trim(a), trim(b)
    v_prev, v_cur = [], [1]
    while True:
        yield EuclidStep(r_cur, v_cur)
        if not r_cur:
            return
        quo, rem = poly_divmod(F, r_prev, r_cur)
        r_prev, r_cur = r_cur, rem
        v_prev, v_cur = v_cur, poly_sub(F, v_prev, poly_mul(F, quo, v_cur))


def partial_euclid(
    F: FieldParams, a: Sequence[int], b: Sequence[int], stop_bound: int
) -> tuple[Poly, Poly]:
    """First ``(r_j, v_j)`` of the Euclid sequence with ``deg r_j < stop_bound``."""
    for step in euclid_steps(F, a, b):
        if deg(step.remainder) < stop_bound:
            return step.remainder, step.multiplier
    raise AssertionError("unreachable: the sequence ends with a zero remainder")


def format_poly(f: Sequence[int]) -> str:
    return " ".join(str(c) for c in f)


def parse_poly(text: str) -> Poly:
    return trim(int(tok) for tok in text.split())
