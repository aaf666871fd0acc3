"""Text and binary symbol streams, parameter files."""

from __future__ import annotations

import json
from pathlib import Path
from typing import BinaryIO, Iterator, Sequence, TextIO

from .code import CodeParams


class FormatError(ValueError):
    def __init__(self, msg: str, line: int | None = None):
        super().__init__(f"line {line}: {msg}" if line is not None else msg)
        self.line = line


def load_params(path: str | Path) -> CodeParams:
    try:
        rec = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise FormatError(f"bad parameter file: {exc}") from exc
    return CodeParams.from_record(rec)


def dump_params(C: CodeParams) -> str:
    return json.dumps(C.to_record()) + "\n"


def read_words(stream: TextIO, q: int, length: int) -> Iterator[list[int]]:
    """Yield one word per non-blank line, validating symbol range and count."""
    for lineno, line in enumerate(stream, 1):
        if not line.strip():
            continue
        try:
            word = [int(tok) for tok in line.split()]
        except ValueError:
            raise FormatError("non-integer symbol", lineno) from None
        if len(word) != length:
            raise FormatError(f"expected {length} symbols, got {len(word)}", lineno)
        if any(not 0 <= s < q for s in word):
            raise FormatError(f"symbol out of range [0, {q})", lineno)
        yield word


def format_word(word: Sequence[int]) -> str:
    return " ".join(str(s) for s in word)


def symbol_width(q: int) -> int:
    return ((q - 1).bit_length() + 7) // 8


def read_words_binary(stream: BinaryIO, q: int, length: int) -> Iterator[list[int]]:
    w = symbol_width(q)
    rec = w * length
    data = stream.read()
    if len(data) % rec:
        raise FormatError(f"binary stream length {len(data)} is not a multiple of {rec}")
    for idx in range(0, len(data), rec):
        chunk = data[idx : idx + rec]
        word = [int.from_bytes(chunk[i : i + w], "big") for i in range(0, rec, w)]
        if any(s >= q for s in word):
            raise FormatError(f"symbol out of range [0, {q})", idx // rec + 1)
        yield word


def pack_word(word: Sequence[int], q: int) -> bytes:
    w = symbol_width(q)
    return b"".join(s.to_bytes(w, "big") for s in word)
