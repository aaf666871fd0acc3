"""Differential sweeps: Gao vs the linear-system oracle, Gao vs Welch-Berlekamp.

Every successful decode in a sweep also has its key equation re-checked
(``residual_violations``), so one sweep covers both agreement and residuals.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .channel import all_messages, all_patterns, count_patterns, random_message, random_pattern
from .code import CodeParams, ErrorPattern, Method, apply_errors, encode, transcode
from .errors import BudgetExceeded
from .gao import congruence_residual, decode_gao
from .gs_oracle import decode_gs, pointwise_residuals
from .result import DecodeResult
from .rng import SplitMix64
from .wb import KeyEquationSolution, decode_wb, key_equation_residuals

DEFAULT_BUDGET = 2_000_000


def budget() -> int:
    return int(os.environ.get("RSCODEC_BUDGET", DEFAULT_BUDGET))


@dataclass
class Report:
    name: str
    trials: int = 0
    agree: int = 0
    disagree: int = 0
    failures: int = 0
    residual_violations: int = 0
    examples: list = field(default_factory=list, repr=False)

    def line(self) -> str:
        return (
            f"{self.name}: trials={self.trials} agree={self.agree} disagree={self.disagree} "
            f"failures={self.failures} residual_violations={self.residual_violations}"
        )

    @property
    def clean(self) -> bool:
        return self.disagree == 0 and self.residual_violations == 0


def gao_residual_ok(C: CodeParams, res: DecodeResult) -> bool:
    tr = res.trace
    return not congruence_residual(C, tr["T"], tr["W"], tr["P"])


def gs_residual_ok(C: CodeParams, R, res: DecodeResult) -> bool:
    return not any(pointwise_residuals(C, R, res.trace["W"], res.trace["P"]))


def wb_residual_ok(C: CodeParams, res: DecodeResult) -> bool:
    tr = res.trace
    sol = KeyEquationSolution(tr["N"], tr["W_m"])
    return not any(key_equation_residuals(C, tr["S"], sol))


def _cases(
    C: CodeParams, positions, exhaustive: bool, trials: int, seed: int
) -> Iterator[tuple[list[int], ErrorPattern]]:
    if exhaustive:
        total = C.field.q**C.k * count_patterns(C.field.q, len(positions), C.t)
        if total > budget():
            raise BudgetExceeded(f"exhaustive sweep needs {total} decodes, budget is {budget()}")
        for msg in all_messages(C):
            for pat in all_patterns(C, C.t, positions):
                yield msg, pat
        return
    rng = SplitMix64(seed)
    for _ in range(trials):
        msg = random_message(C, rng)
        w = rng.below(C.t + 1)
        yield msg, random_pattern(C, rng, w, positions)


def gao_vs_gs(C: CodeParams, exhaustive: bool = False, trials: int = 1000, seed: int = 0) -> Report:
    C = C.with_method(Method.SPECTRAL)
    rep = Report("gao-vs-gs")
    F = C.field
    for msg, pat in _cases(C, range(C.n), exhaustive, trials, seed):
        R = apply_errors(F, encode(C, msg), pat)
        a, b = decode_gao(C, R), decode_gs(C, R)
        _tally(rep, a, b, a.same_outcome(b), (msg, pat))
        if a.ok and not gao_residual_ok(C, a):
            rep.residual_violations += 1
        if b.ok and not gs_residual_ok(C, R, b):
            rep.residual_violations += 1
    return rep


def gao_vs_wb(C: CodeParams, exhaustive: bool = False, trials: int = 1000, seed: int = 0) -> Report:
    """Same received word through both decoders; errors confined to the message part.

    The systematic codeword is the transmitted word; Gao sees it as a spectral
    codeword of the same code (requires b = 1).
    """
    Cs, Cr = C.with_method(Method.SPECTRAL), C.with_method(Method.REMAINDER)
    if C.b != 1:
        raise ValueError("spectral and remainder codes coincide only for b = 1")
    rep = Report("gao-vs-wb")
    F = C.field
    for msg, pat in _cases(Cr, Cr.message_positions, exhaustive, trials, seed):
        R = apply_errors(F, encode(Cr, msg), pat)
        a, b = decode_gao(Cs, R), decode_wb(Cr, R)
        agree = a.ok == b.ok and (not a.ok or a.codeword == b.codeword)
        if a.ok and b.ok:
            agree = agree and transcode(Cr, Cs, b.message) == a.message
        _tally(rep, a, b, agree, (msg, pat))
        if a.ok and not gao_residual_ok(Cs, a):
            rep.residual_violations += 1
        if b.ok and not wb_residual_ok(Cr, b):
            rep.residual_violations += 1
    return rep


def _tally(rep: Report, a: DecodeResult, b: DecodeResult, agree: bool, case) -> None:
    rep.trials += 1
    if agree:
        rep.agree += 1
    else:
        rep.disagree += 1
        if len(rep.examples) < 5:
            rep.examples.append(case)
    if not a.ok or not b.ok:
        rep.failures += 1


def run_all(C: CodeParams, exhaustive: bool = False, trials: int = 1000, seed: int = 0) -> list[Report]:
    reports = [gao_vs_gs(C, exhaustive, trials, seed)]
    if C.b == 1:
        reports.append(gao_vs_wb(C, exhaustive, trials, seed))
    return reports


def summarize(reports: Iterable[Report]) -> str:
    return "\n".join(r.line() for r in reports)
