"""``rscodec`` command line.

Exit codes: 0 success, 1 decode failures present, 2 usage/format error,
3 internal invariant violation (including decoder disagreement in diff-test).
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import bench as bench_mod
from . import difftest
from .channel import allowed_positions, random_pattern
from .code import CodeParams, Method, apply_errors, encode
from .errors import InternalError, RSError
from .formats import (
    FormatError,
    dump_params,
    format_word,
    load_params,
    pack_word,
    read_words,
    read_words_binary,
)
from .gao import decode_gao
from .gf import find_primitive_poly, make_field
from .gs_oracle import decode_gs
from .poly import format_poly
from .rng import SplitMix64
from .wb import decode_wb

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _ints(text: str) -> list[int]:
    return [int(t) for t in text.replace(",", " ").split()]


def _open_in(path, binary=False):
    if path in (None, "-"):
        return sys.stdin.buffer if binary else sys.stdin
    return open(path, "rb" if binary else "r")


def _words(args, C: CodeParams, length: int):
    stream = _open_in(args.input, args.binary)
    if args.binary:
        return read_words_binary(stream, C.field.q, length)
    return read_words(stream, C.field.q, length)


def _emit(out, word, C: CodeParams, binary: bool):
    if binary:
        out.buffer.write(pack_word(word, C.field.q))
    else:
        out.write(format_word(word) + "\n")


def cmd_gen_params(args) -> int:
    prim = _ints(args.prim_poly) if args.prim_poly else None
    if args.m > 1 and prim is None:
        prim = find_primitive_poly(args.p, args.m)
    F = make_field(args.p, args.m, prim, args.alpha)
    C = CodeParams(F, args.k, args.b, Method(args.method))
    text = dump_params(C)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_encode(args) -> int:
    C = load_params(args.params)
    for msg in _words(args, C, C.k):
        _emit(sys.stdout, encode(C, msg), C, args.binary)
    return EXIT_OK


def cmd_corrupt(args) -> int:
    C = load_params(args.params)
    rng = SplitMix64(args.seed)
    positions = allowed_positions(C, args.positions)
    if args.errors > len(positions):
        raise UsageError(f"--errors {args.errors} exceeds the {len(positions)} available positions")
    log = open(args.log, "w") if args.log else None
    try:
        for idx, word in enumerate(_words(args, C, C.n)):
            pat = random_pattern(C, rng, args.errors, positions)
            _emit(sys.stdout, apply_errors(C.field, word, pat), C, args.binary)
            if log:
                log.write(f"{idx} " + " ".join(f"{i}:{y}" for i, y in pat.entries) + "\n")
    finally:
        if log:
            log.close()
    return EXIT_OK


def _trace(res, algo: str, err) -> None:
    tr = res.trace
    if algo == "wb":
        keys = ("S", "p", "L")
    elif algo == "gao":
        keys = ("T",)
    else:
        keys = ()
    for key in keys:
        if key in tr:
            err.write(f"{key}: {format_poly(tr[key])}\n")
    for j, step in enumerate(tr.get("euclid", [])):
        err.write(f"euclid[{j}] r: {format_poly(step.remainder)} | v: {format_poly(step.multiplier)}\n")
    for key in ("P", "W", "N", "W_m", "e"):
        if key in tr:
            val = tr[key]
            err.write(f"{key}: {val if isinstance(val, int) else format_poly(val)}\n")
    err.write(f"result: {'ok' if res.ok else 'FAIL ' + res.reason.value}\n")


def cmd_decode(args) -> int:
    C = load_params(args.params)
    needed = Method.REMAINDER if args.algo == "wb" else Method.SPECTRAL
    C.require(needed)
    if args.algo == "gao":
        decode = decode_gao
    elif args.algo == "wb":
        decode = decode_wb
    else:
        tmax = C.t if args.tmax is None else args.tmax
        if not 0 <= tmax <= C.t:
            raise UsageError(f"--tmax must lie in [0, {C.t}]")
        decode = lambda c, r: decode_gs(c, r, tmax)  # noqa: E731
    failures = 0
    for word in _words(args, C, C.n):
        res = decode(C, word)
        if args.trace_keyeq:
            _trace(res, args.algo, sys.stderr)
        if res.ok:
            sys.stdout.write(format_word(res.codeword if args.emit == "codeword" else res.message) + "\n")
        else:
            failures += 1
            sys.stdout.write(f"FAIL {res.reason.value}\n")
    if failures:
        sys.stderr.write(f"{failures} word(s) failed to decode\n")
        return EXIT_FAIL
    return EXIT_OK


def cmd_diff_test(args) -> int:
    C = load_params(args.params)
    reports = difftest.run_all(C, exhaustive=args.exhaustive, trials=args.trials, seed=args.seed)
    print(difftest.summarize(reports))
    if C.b != 1:
        print("gao-vs-wb: skipped (spectral and remainder codes coincide only for b = 1)")
    return EXIT_OK if all(r.clean for r in reports) else EXIT_INTERNAL


def cmd_bench(args) -> int:
    C = load_params(args.params)
    algos = tuple(args.algos.split(","))
    timings = bench_mod.bench(C, trials=args.trials, seed=args.seed, algos=algos, errors=args.errors)
    print(bench_mod.format_table(C, timings))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="rscodec", description="Reed-Solomon codec with Gao, Welch-Berlekamp and linear-system decoders")
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen-params", help="write a code parameter file")
    g.add_argument("--p", type=int, required=True)
    g.add_argument("--m", type=int, default=1)
    g.add_argument("--prim-poly", help="coefficients c0..cm, low degree first")
    g.add_argument("--alpha", type=int)
    g.add_argument("--k", type=int, required=True)
    g.add_argument("--b", type=int, default=1)
    g.add_argument("--method", choices=[m.value for m in Method], default="spectral")
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen_params)

    def stream_cmd(name, func, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("--params", required=True)
        sp.add_argument("input", nargs="?", default="-")
        sp.add_argument("--binary", action="store_true", help="fixed-width big-endian symbols")
        sp.set_defaults(func=func)
        return sp

    stream_cmd("encode", cmd_encode, "encode messages (k symbols per line)")

    c = stream_cmd("corrupt", cmd_corrupt, "inject seeded random errors")
    c.add_argument("--errors", type=int, default=0)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--positions", choices=["message", "parity", "any"], default="any")
    c.add_argument("--log", help="sidecar file of injected (position:value) pairs")

    d = stream_cmd("decode", cmd_decode, "decode received words (n symbols per line)")
    d.add_argument("--algo", choices=["gao", "wb", "gs"], default="gao")
    d.add_argument("--tmax", type=int)
    d.add_argument("--emit", choices=["message", "codeword"], default="message")
    d.add_argument("--trace-keyeq", action="store_true", help="dump intermediate polynomials to stderr")

    t = sub.add_parser("diff-test", help="cross-check the decoders")
    t.add_argument("--params", required=True)
    mode = t.add_mutually_exclusive_group()
    mode.add_argument("--trials", type=int, default=1000)
    mode.add_argument("--exhaustive", action="store_true")
    t.add_argument("--seed", type=int, default=0)
    t.set_defaults(func=cmd_diff_test)

    b = sub.add_parser("bench", help="time the decoders")
    b.add_argument("--params", required=True)
    b.add_argument("--trials", type=int, default=3)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--errors", type=int, help="errors per word (default: capability t)")
    b.add_argument("--algos", default="gao,wb,gs")
    b.set_defaults(func=cmd_bench)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InternalError, AssertionError) as exc:
        sys.stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return EXIT_INTERNAL
    except (RSError, FormatError, UsageError, OSError, ValueError) as exc:
        sys.stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
