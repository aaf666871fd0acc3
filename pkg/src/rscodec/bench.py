"""Wall-clock timing of the three decoders at full error load."""

from __future__ import annotations

import time
from typing import Callable

from .channel import random_message, random_pattern
from .code import CodeParams, Method, apply_errors, encode
from .gao import decode_gao
from .gs_oracle import decode_gs
from .rng import SplitMix64
from .wb import decode_wb

NOTE = (
    "note: naive O(n^2) transforms and Euclid; fast DFT and fast-GCD variants "
    "are not implemented, so these timings do not reflect O(n log^2 n) behaviour"
)


def _workload(C: CodeParams, trials: int, seed: int, errors: int, positions):
    rng = SplitMix64(seed)
    out = []
    for _ in range(trials):
        msg = random_message(C, rng)
        pat = random_pattern(C, rng, errors, positions)
        out.append(apply_errors(C.field, encode(C, msg), pat))
    return out


def time_decoder(decode: Callable, C: CodeParams, words, repeats: int = 1) -> float:
    """Best-of-``repeats`` mean seconds per decode."""
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        for w in words:
            decode(C, w)
        best = min(best, (time.perf_counter() - t0) / len(words))
    return best


def gao_time(C: CodeParams, trials: int = 5, seed: int = 0, repeats: int = 3) -> float:
    Cs = C.with_method(Method.SPECTRAL)
    words = _workload(Cs, trials, seed, Cs.t, range(Cs.n))
    return time_decoder(decode_gao, Cs, words, repeats)


def bench(C: CodeParams, trials: int = 3, seed: int = 0, algos=("gao", "wb", "gs"), errors: int | None = None) -> dict:
    """Seconds per decode for each algorithm, ``errors`` errors per word (default t)."""
    Cs, Cr = C.with_method(Method.SPECTRAL), C.with_method(Method.REMAINDER)
    errors = C.t if errors is None else errors
    out = {}
    if "gao" in algos:
        out["gao"] = time_decoder(decode_gao, Cs, _workload(Cs, trials, seed, errors, range(C.n)))
    if "wb" in algos:
        out["wb"] = time_decoder(decode_wb, Cr, _workload(Cr, trials, seed, errors, Cr.message_positions))
    if "gs" in algos:
        out["gs"] = time_decoder(
            lambda c, w: decode_gs(c, w, errors), Cs, _workload(Cs, trials, seed, errors, range(C.n))
        )
    return out


def format_table(C: CodeParams, timings: dict) -> str:
    lines = [f"n={C.n} k={C.k} d={C.d} q={C.field.q}", f"{'algo':<6}{'sec/decode':>14}"]
    for name, sec in timings.items():
        lines.append(f"{name:<6}{sec:>14.6f}")
    lines.append(NOTE)
    return "\n".join(lines)
