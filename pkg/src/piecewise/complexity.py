"""Piecewise complexity h(u) and minimality index ρ(u).

``h`` scans the r- and ℓ-tables for the best split point and inserted
letter; ``rho`` scans the r- and ℓ-vectors for the best deleted position.
The two measures share no code beyond the word type, which is what makes
cross-checking them (``h ≥ 1 + ρ``, equality on binary words) meaningful.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass

import numpy as np

from .side import _last_column, build_l_table, build_r_table, extend_columns, l_vector, r_vector
from .words import Alphabet, Word

STREAM_BLOCK = 1 << 16


def _h_streaming(u: Word, block: int):
    # Keeps r-columns only at block boundaries, then walks blocks right to
    # left rebuilding each block's r-rows while extending the ℓ-column.
    codes = np.ascontiguousarray(u.codes)
    n, size = len(codes), len(u.alphabet)
    col = np.zeros(size, dtype=np.int32)
    checkpoints = []
    for start in range(0, n, block):
        checkpoints.append(col)
        col = _last_column(codes[start:start + block], col)
    if not checkpoints:
        checkpoints.append(col)
    ell = np.zeros(size, dtype=np.int32)
    best, witness = -1, (0, 0)
    for j in range(len(checkpoints) - 1, -1, -1):
        start, end = j * block, min(j * block + block, n)
        segment = codes[start:end]
        rows_r = extend_columns(segment, checkpoints[j])
        rows_l_rev = extend_columns(np.ascontiguousarray(segment[::-1]), ell)
        total = rows_r.astype(np.int64) + rows_l_rev[::-1]
        flat = int(np.argmax(total))
        value = int(total.flat[flat])
        if value >= best:
            best, witness = value, (start + flat // size, flat % size)
        ell = rows_l_rev[-1]
    return best, witness


def h_detail(u: Word, streaming: bool = False, block: int = STREAM_BLOCK):
    """``(h(u), (split position, symbol))``.

    The witness maximizes ``r(u(0,i),a) + ℓ(a,u(i,|u|)) + 1``; ties go to the
    smallest ``i``, then the first letter in alphabet order.  Over the empty
    alphabet ``h(ε) = 0`` and the witness is ``None``.
    """
    size = len(u.alphabet)
    if size == 0:
        return 0, None
    if streaming:
        best, (pos, code) = _h_streaming(u, block)
    else:
        total = build_r_table(u).values.astype(np.int64) + build_l_table(u).values
        flat = int(np.argmax(total))
        best, pos, code = int(total.flat[flat]), flat // size, flat % size
    return best + 1, (pos, u.alphabet.symbols[code])


def h(u: Word, streaming: bool = False) -> int:
    return h_detail(u, streaming=streaming)[0]


def rho_detail(u: Word):
    """``(ρ(u), position)`` with the 1-based position maximizing ``r_i + ℓ_i``."""
    if not len(u):
        return 0, None
    total = r_vector(u).astype(np.int64) + l_vector(u)
    i = int(np.argmax(total))
    return int(total[i]) + 1, i + 1


def rho(u: Word) -> int:
    return rho_detail(u)[0]


@dataclass(frozen=True)
class ComplexityReport:
    word_length: int
    alphabet: tuple
    h: int
    rho: int
    h_witness: tuple | None
    rho_witness: int | None
    elapsed: float

    @property
    def alphabet_size(self) -> int:
        return len(self.alphabet)

    @property
    def binary_identity(self) -> bool:
        """Whether ``h = ρ + 1`` holds for this word (always, over two letters)."""
        return self.h == self.rho + 1

    def to_dict(self) -> dict:
        pos, symbol = self.h_witness if self.h_witness else (None, None)
        return {
            "word_length": self.word_length,
            "alphabet": [str(s) for s in self.alphabet],
            "h": self.h,
            "rho": self.rho,
            "h_witness": {"pos": pos, "symbol": None if symbol is None else str(symbol)},
            "rho_witness": {"pos": self.rho_witness},
            "micros": int(round(self.elapsed * 1e6)),
        }


def analyze(u: Word, streaming: bool = False) -> ComplexityReport:
    t0 = time.perf_counter()
    h_value, h_wit = h_detail(u, streaming=streaming)
    rho_value, rho_wit = rho_detail(u)
    elapsed = time.perf_counter() - t0
    return ComplexityReport(len(u), u.alphabet.symbols, h_value, rho_value, h_wit, rho_wit, elapsed)


def gap_search(max_length: int, alphabet: Alphabet | str = "ABC"):
    """Largest ``h(u) - ρ(u)`` over all words up to ``max_length``.

    Returns ``(gap, word)`` for the first word (by length, then alphabet
    order) reaching the maximum.  Exploratory only.
    """
    if not isinstance(alphabet, Alphabet):
        alphabet = Alphabet(tuple(alphabet))
    best = (-1, None)
    for n in range(max_length + 1):
        for codes in itertools.product(range(len(alphabet)), repeat=n):
            u = Word(codes, alphabet)
            gap = h(u) - rho(u)
            if gap > best[0]:
                best = (gap, u)
    return best
