"""Error injection: seeded random patterns and exhaustive enumeration."""

from __future__ import annotations

import itertools
from math import comb
from typing import Iterator, Sequence

from .code import CodeParams, ErrorPattern
from .rng import SplitMix64


def allowed_positions(C: CodeParams, where: str) -> range:
    if where == "message":
        return C.message_positions
    if where == "parity":
        return C.parity_positions
    if where == "any":
        return range(C.n)
    raise ValueError(f"unknown position class {where!r}")


def random_pattern(C: CodeParams, rng: SplitMix64, t: int, positions: Sequence[int]) -> ErrorPattern:
    if t > len(positions):
        raise ValueError(f"cannot place {t} errors in {len(positions)} positions")
    pos = rng.sample(positions, t)
    return ErrorPattern(tuple((i, rng.nonzero(C.field.q)) for i in pos))


def all_patterns(C: CodeParams, max_weight: int, positions: Sequence[int]) -> Iterator[ErrorPattern]:
    """Every pattern of weight 0..max_weight supported on ``positions``."""
    values = range(1, C.field.q)
    for w in range(max_weight + 1):
        for pos in itertools.combinations(positions, w):
            for ys in itertools.product(values, repeat=w):
                yield ErrorPattern(tuple(zip(pos, ys)))


def count_patterns(q: int, npos: int, max_weight: int) -> int:
    return sum(comb(npos, w) * (q - 1) ** w for w in range(max_weight + 1))


def all_messages(C: CodeParams) -> Iterator[list[int]]:
    for m in itertools.product(range(C.field.q), repeat=C.k):
        yield list(m)


def random_message(C: CodeParams, rng: SplitMix64) -> list[int]:
    return [rng.below(C.field.q) for _ in range(C.k)]
