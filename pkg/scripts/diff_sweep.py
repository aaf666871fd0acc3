"""Run the decoder agreement sweeps on a few small codes and print the reports."""

import argparse

from rscodec import difftest
from rscodec.code import CodeParams
from rscodec.gf import find_primitive_poly, make_field

CODES = {
    "gf7-rs6-2": (7, 1, 2, "exhaustive"),
    "gf8-rs7-3": (2, 3, 3, "trials"),
    "gf9-rs8-4": (3, 2, 4, "trials"),
    "gf16-rs15-7": (2, 4, 7, "trials"),
    "gf32-rs31-15": (2, 5, 15, "trials"),
}


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--trials", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()
    for name, (p, m, k, mode) in CODES.items():
        F = make_field(p, m, find_primitive_poly(p, m) if m > 1 else None)
        C = CodeParams(F, k)
        reps = difftest.run_all(C, exhaustive=mode == "exhaustive", trials=args.trials, seed=args.seed)
        print(f"[{name}] {mode}")
        print(difftest.summarize(reps))


if __name__ == "__main__":
    main()
