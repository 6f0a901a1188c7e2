"""Corpus file formats and reproducible random instances.

Corpus files hold one Pauli string per line, UTF-8, LF line endings on
write (CRLF accepted on read). Lines starting with ``#`` are comments. A
file is either all dense (``XIZY``, character ``p`` is qubit ``p``) or all
sparse (``X0 Z3``), detected from the first non-blank data line: sparse iff
it contains a digit. In sparse files an empty line is the weight-0 string;
in dense files weight 0 is written ``I...I`` and blank lines are errors.
An optional global phase (``-``, ``+i``, ...) may prefix a dense line or
lead a sparse line; it is discarded.

Random instances use SplitMix64 (Steele, Lea & Flood 2014) seeded with the
64-bit seed. ``below(b)`` draws 64-bit words, rejects any word at or above
``2**64 - 2**64 % b`` and returns ``word % b``. Each string draws, in order:
its weight (``fixed``: ``k``; ``uniform``: ``1 + below(k)``); a support by
Floyd's algorithm (for ``j`` in ``n-w .. n-1``: ``t = below(j + 1)``, add
``t`` unless already present, else add ``j``); then one letter per support
qubit in ascending qubit order, ``(X, Y, Z)[below(3)]``. The sequence is
fixed forever so instances reproduce across platforms and languages.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

from .errors import (
    BadCharacter,
    BadToken,
    CorpusParseError,
    EmptyLine,
    IndexOutOfRange,
    InvalidSpec,
    PauliZetaError,
)
from .pauli import MAX_INDEX, PauliLetter, SparsePauliString, normalize

__all__ = [
    "Corpus",
    "InstanceSpec",
    "SplitMix64",
    "detect_format",
    "generate",
    "parse_dense_line",
    "parse_sparse_line",
    "read_corpus",
    "serialize",
    "write_corpus",
]

_DENSE_PHASE = re.compile(r"[+-]?i?")
_SPARSE_PHASE = re.compile(r"[+-]?(?:1|i)?")
_SPARSE_TOKEN = re.compile(r"([IXYZ])(\d+)")
_LETTERS = "IXYZ"

MASK64 = (1 << 64) - 1


def parse_dense_line(text: str) -> SparsePauliString:
    """Parse a dense label; character position ``p`` (after any phase) is qubit ``p``."""
    line = text.strip()
    if not line:
        raise EmptyLine()
    offset = _DENSE_PHASE.match(line).end()
    body = line[offset:]
    if not body:
        raise EmptyLine()
    entries = []
    for p, ch in enumerate(body):
        if ch not in _LETTERS:
            raise BadCharacter(ch, p + offset)
        if ch != "I":
            entries.append((p, PauliLetter[ch]))
    return SparsePauliString(tuple(entries))


def parse_sparse_line(text: str) -> SparsePauliString:
    """Parse whitespace-separated ``<letter><index>`` tokens, e.g. ``"X0 Z3"``."""
    tokens = text.split()
    if tokens and _SPARSE_PHASE.fullmatch(tokens[0]) and not _SPARSE_TOKEN.fullmatch(tokens[0]):
        tokens = tokens[1:]
    raw = []
    for tok in tokens:
        m = _SPARSE_TOKEN.fullmatch(tok)
        if m is None:
            raise BadToken(tok)
        raw.append((int(m.group(2)), m.group(1)))
    return normalize(raw)


def serialize(p: SparsePauliString, fmt: str = "sparse", n=None) -> str:
    """Render ``p`` as one line (no newline). Dense output needs the width ``n``."""
    if fmt == "sparse":
        return " ".join(f"{c.name}{j}" for j, c in p.entries)
    if fmt != "dense":
        raise ValueError(f"unknown format {fmt!r}")
    if n is None:
        raise ValueError("dense serialization needs an explicit qubit count n")
    need = p.entries[-1][0] + 1 if p.entries else 1
    if n < need:
        raise IndexOutOfRange(f"dense width {n} too small; need at least {need}")
    chars = ["I"] * n
    for j, c in p.entries:
        chars[j] = c.name
    return "".join(chars)


def detect_format(line: str) -> str:
    return "sparse" if any(ch.isdigit() for ch in line) else "dense"


@dataclass
class Corpus:
    strings: list
    line_numbers: list
    format: str

    def __len__(self):
        return len(self.strings)


def _data_lines(lines):
    for no, raw in enumerate(lines, start=1):
        line = raw.rstrip("\r\n")
        if line.lstrip().startswith("#"):
            continue
        yield no, line


def read_corpus(source, fmt: str = "auto") -> Corpus:
    """Read a corpus from a path or an iterable of lines.

    Raises:
        CorpusParseError: carries the 1-based line number and the cause.
    """
    if isinstance(source, (str, Path)):
        with open(source, encoding="utf-8", newline="") as fh:
            lines = fh.read().splitlines()
    else:
        lines = list(source)
    data = list(_data_lines(lines))
    if fmt == "auto":
        first = next((line for _, line in data if line.strip()), None)
        fmt = detect_format(first) if first is not None else "dense"
    if fmt not in ("dense", "sparse"):
        raise ValueError(f"unknown format {fmt!r}")
    parse = parse_dense_line if fmt == "dense" else parse_sparse_line
    if fmt == "dense":
        # Trailing blank lines in dense files are tolerated.
        while data and not data[-1][1].strip():
            data.pop()
    strings, numbers = [], []
    for no, line in data:
        try:
            strings.append(parse(line))
        except PauliZetaError as exc:
            raise CorpusParseError(no, exc) from exc
        numbers.append(no)
    return Corpus(strings, numbers, fmt)


def write_corpus(path, strings, fmt: str = "sparse", n=None, header=None):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        if header:
            for line in header.splitlines():
                fh.write(f"# {line}\n")
        for s in strings:
            fh.write(serialize(s, fmt, n) + "\n")


class SplitMix64:
    """SplitMix64 generator; fully specified, so streams match across implementations."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in ``[0, bound)`` by rejection."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - (1 << 64) % bound
        while True:
            r = self.next_u64()
            if r < limit:
                return r % bound


WEIGHT_DISTS = ("fixed", "uniform")
_GEN_LETTERS = (PauliLetter.X, PauliLetter.Y, PauliLetter.Z)


@dataclass(frozen=True)
class InstanceSpec:
    m: int
    n: int
    k: int
    weight_dist: str = "uniform"
    seed: int = 0

    def validate(self):
        if self.m < 0:
            raise InvalidSpec(f"m must be >= 0, got {self.m}")
        if not 1 <= self.k <= self.n:
            raise InvalidSpec(f"need 1 <= k <= n, got k={self.k}, n={self.n}")
        if self.n > MAX_INDEX + 1:
            raise InvalidSpec(f"n must be at most {MAX_INDEX + 1}")
        if self.weight_dist not in WEIGHT_DISTS:
            raise InvalidSpec(f"weight_dist must be one of {WEIGHT_DISTS}")
        if not 0 <= self.seed <= MASK64:
            raise InvalidSpec("seed must be an unsigned 64-bit value")
        return self


def generate(spec: InstanceSpec) -> list:
    """Deterministic list of ``spec.m`` random strings (see module docstring)."""
    spec.validate()
    rng = SplitMix64(spec.seed)
    n, k = spec.n, spec.k
    fixed = spec.weight_dist == "fixed"
    out = []
    for _ in range(spec.m):
        w = k if fixed else 1 + rng.below(k)
        chosen = set()
        for j in range(n - w, n):
            t = rng.below(j + 1)
            chosen.add(j if t in chosen else t)
        entries = tuple((j, _GEN_LETTERS[rng.below(3)]) for j in sorted(chosen))
        out.append(SparsePauliString(entries))
    return out
