"""Reed-Solomon code parameters and the two coding methods.

Position ``i`` of every word carries locator ``alpha^i``. Spectral coding
evaluates the message polynomial at all locators; remainder (systematic)
coding keeps the message in the top k positions ``[d-1, n-1]`` and fills the
low ``d-1`` positions with parity so the word is a multiple of g(x).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence

from .errors import CodeError, InternalError, MethodMismatch
from .gf import FieldParams, field_from_record
from .poly import Poly, from_roots, poly_divmod, poly_eval, poly_neg, trim
from .transform import dft, idft


class Method(str, Enum):
    SPECTRAL = "spectral"
    REMAINDER = "remainder"


def generator_poly(F: FieldParams, b: int, d: int) -> Poly:
    if d < 2:
        raise CodeError(f"designed distance must be >= 2, got {d}")
    return from_roots(F, [F.alpha_pow(i) for i in range(b, b + d - 1)])


@dataclass(frozen=True)
class CodeParams:
    field: FieldParams
    k: int
    b: int = 1
    method: Method = Method.SPECTRAL
    g: tuple[int, ...] = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "method", Method(self.method))
        n = self.field.order
        if not 1 <= self.k < n:
            raise CodeError(f"need 1 <= k < n = {n}, got k = {self.k}")
        if self.b < 0:
            raise CodeError(f"b must be a natural number, got {self.b}")
        object.__setattr__(self, "g", tuple(generator_poly(self.field, self.b, self.d)))

    @property
    def n(self) -> int:
        return self.field.order

    @property
    def d(self) -> int:
        return self.n - self.k + 1

    @property
    def t(self) -> int:
        """Error-correcting capability floor((d-1)/2)."""
        return (self.d - 1) // 2

    @property
    def message_positions(self) -> range:
        return range(self.d - 1, self.n)

    @property
    def parity_positions(self) -> range:
        return range(0, self.d - 1)

    def with_method(self, method) -> "CodeParams":
        return CodeParams(self.field, self.k, self.b, Method(method))

    def require(self, method: Method) -> None:
        if self.method is not method:
            raise MethodMismatch(f"operation needs {method.value} coding, code uses {self.method.value}")

    def to_record(self) -> dict:
        rec = self.field.to_record()
        rec.update(n=self.n, k=self.k, d=self.d, b=self.b, method=self.method.value, g=list(self.g))
        return rec

    @classmethod
    def from_record(cls, rec: dict) -> "CodeParams":
        F = field_from_record(rec)
        code = cls(F, int(rec["k"]), int(rec.get("b", 1)), Method(rec.get("method", "spectral")))
        if "n" in rec and int(rec["n"]) != code.n:
            raise CodeError(f"n = {rec['n']} does not match q - 1 = {code.n}")
        if "g" in rec and trim(rec["g"]) != list(code.g):
            raise InternalError("recorded generator polynomial does not match the field parameters")
        return code


def _check_message(C: CodeParams, msg: Sequence[int]) -> list[int]:
    msg = list(msg)
    if len(msg) != C.k:
        raise CodeError(f"message must have k = {C.k} symbols, got {len(msg)}")
    return msg


def encode_spectral(C: CodeParams, msg: Sequence[int]) -> list[int]:
    C.require(Method.SPECTRAL)
    return dft(C.field, _check_message(C, msg))


def encode_systematic(C: CodeParams, msg: Sequence[int]) -> list[int]:
    C.require(Method.REMAINDER)
    msg = _check_message(C, msg)
    shifted = [0] * (C.d - 1) + msg
    _, rem = poly_divmod(C.field, shifted, C.g)
    parity = poly_neg(C.field, rem)
    return parity + [0] * (C.d - 1 - len(parity)) + msg


def encode(C: CodeParams, msg: Sequence[int]) -> list[int]:
    if C.method is Method.SPECTRAL:
        return encode_spectral(C, msg)
    return encode_systematic(C, msg)


def message_of(C: CodeParams, codeword: Sequence[int]) -> list[int]:
    """Recover the message of a codeword under the code's own method."""
    if C.method is Method.REMAINDER:
        return list(codeword[C.d - 1 :])
    coeffs = idft(C.field, codeword)
    if len(coeffs) > C.k:
        raise CodeError("word is not a spectral codeword")
    return coeffs + [0] * (C.k - len(coeffs))


def transcode(src: CodeParams, dst: CodeParams, msg: Sequence[int]) -> list[int]:
    """Message under ``dst`` of the codeword that ``msg`` encodes under ``src``.

    Only meaningful when both conventions describe the same code, i.e. b = 1.
    """
    return message_of(dst, encode(src, msg))


@dataclass(frozen=True)
class ErrorPattern:
    entries: tuple[tuple[int, int], ...]

    def __post_init__(self):
        entries = tuple(sorted((int(i), int(y)) for i, y in self.entries))
        pos = [i for i, _ in entries]
        if len(set(pos)) != len(pos):
            raise CodeError("error positions must be distinct")
        if any(y == 0 for _, y in entries):
            raise CodeError("error values must be nonzero")
        object.__setattr__(self, "entries", entries)

    @property
    def positions(self) -> list[int]:
        return [i for i, _ in self.entries]

    @property
    def weight(self) -> int:
        return len(self.entries)

    def locators(self, F: FieldParams) -> list[int]:
        return [F.alpha_pow(i) for i in self.positions]

    def error_poly(self, n: int) -> Poly:
        e = [0] * n
        for i, y in self.entries:
            e[i] = y
        return trim(e)

    def locator_poly(self, F: FieldParams) -> Poly:
        return from_roots(F, self.locators(F))

    def message_locator_poly(self, C: CodeParams) -> Poly:
        lo = C.d - 1
        return from_roots(C.field, [C.field.alpha_pow(i) for i in self.positions if i >= lo])


def apply_errors(F: FieldParams, codeword: Sequence[int], pattern: ErrorPattern) -> list[int]:
    out = list(codeword)
    for i, y in pattern.entries:
        if not 0 <= i < len(out):
            raise CodeError(f"error position {i} outside [0, {len(out) - 1}]")
        out[i] = F.add(out[i], y)
    return out


def hamming_distance(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x != y for x, y in zip(a, b))


def is_codeword(C: CodeParams, word: Sequence[int]) -> bool:
    return not poly_divmod(C.field, trim(word), C.g)[1]


def syndrome_values(C: CodeParams, word: Sequence[int]) -> list[int]:
    """Evaluations of the word at the roots of g; all zero iff it is a codeword."""
    return [poly_eval(C.field, trim(word), C.field.alpha_pow(i)) for i in range(C.b, C.b + C.d - 1)]
