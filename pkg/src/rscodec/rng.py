"""SplitMix64, written out so corruption runs are reproducible anywhere.

State transition and output mix (all arithmetic mod 2^64)::

    state += 0x9E3779B97F4A7C15
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    return z ^ (z >> 31)

``below(m)`` is ``next() % m``. ``sample(pop, t)`` is a partial Fisher-Yates
shuffle: for i in 0..t-1 swap pop[i] with pop[i + below(len - i)].
"""

from __future__ import annotations

from typing import Sequence

_MASK = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, m: int) -> int:
        return self.next() % m

    def sample(self, population: Sequence[int], t: int) -> list[int]:
        pop = list(population)
        for i in range(t):
            j = i + self.below(len(pop) - i)
            pop[i], pop[j] = pop[j], pop[i]
        return pop[:t]

    def nonzero(self, q: int) -> int:
        return 1 + self.below(q - 1)
