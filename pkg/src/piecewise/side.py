"""Side distances r(u,t) and ℓ(t,u): single values, full tables and vectors.

Everything on the ℓ side is obtained from the r side by reversing the word;
there is no separate ℓ code path.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numba import njit

from .oracle import INF
from .words import Alphabet, Word, common, reverse


@njit(cache=True)
def _extend_columns(codes, start):
    # row i holds r(prefix of length i, a) for every letter a
    n = codes.shape[0]
    size = start.shape[0]
    out = np.empty((n + 1, size), dtype=np.int32)
    out[0, :] = start
    for i in range(n):
        b = codes[i]
        t = out[i, b] + 1
        for a in range(size):
            v = out[i, a]
            out[i + 1, a] = t if t < v else v
        out[i + 1, b] = t
    return out


@njit(cache=True)
def _last_column(codes, start):
    col = start.copy()
    size = col.shape[0]
    for i in range(codes.shape[0]):
        b = codes[i]
        t = col[b] + 1
        for a in range(size):
            if t < col[a]:
                col[a] = t
        col[b] = t
    return col


@njit(cache=True)
def _r_vector(codes, size):
    # Linear-time stack algorithm over 1-based positions; position 0 is a
    # sentinel whose r value is never read.
    n = codes.shape[0]
    r = np.zeros(n + 1, dtype=np.int32)
    locc = np.zeros(size, dtype=np.int64)
    stack = np.empty(2 * n + 2, dtype=np.int64)
    top = 0
    stack[0] = 0
    pushes = 0
    for i in range(1, n + 1):
        a = codes[i - 1]
        j = 0
        while top >= 0 and stack[top] >= locc[a]:
            j = stack[top]
            top -= 1
        r[i] = 1 + r[j] if j > 0 else 0
        top += 1
        stack[top] = j
        top += 1
        stack[top] = i
        pushes += 2
        locc[a] = i
    return r[1:], pushes


def _zeros(size: int) -> np.ndarray:
    return np.zeros(size, dtype=np.int32)


def extend_columns(codes: np.ndarray, start: np.ndarray) -> np.ndarray:
    """Apply the one-letter update rule along ``codes`` from column ``start``.

    Returns a ``(len(codes)+1, |A|)`` array whose first row is ``start``.
    """
    return _extend_columns(np.ascontiguousarray(codes), np.ascontiguousarray(start, dtype=np.int32))


@dataclass(frozen=True)
class SideTable:
    """``values[i, a]`` is r(u(0,i), a) (orientation ``"r"``) or ℓ(a, u(i,|u|)) (``"l"``).

    Rows are prefix/suffix split points ``i = 0..|u|``, columns follow the
    alphabet order.
    """

    orientation: str
    values: np.ndarray
    word: Word

    def at(self, i: int, symbol) -> int:
        return int(self.values[i, self.word.alphabet.index(symbol)])

    def row(self, symbol) -> list[int]:
        """All split points for one letter, i.e. one printed table row."""
        return self.values[:, self.word.alphabet.index(symbol)].tolist()


def build_r_table(u: Word) -> SideTable:
    values = extend_columns(u.codes, _zeros(len(u.alphabet)))
    values.setflags(write=False)
    return SideTable("r", values, u)


def build_l_table(u: Word) -> SideTable:
    mirrored = extend_columns(reverse(u).codes, _zeros(len(u.alphabet)))
    values = np.ascontiguousarray(mirrored[::-1])
    values.setflags(write=False)
    return SideTable("l", values, u)


def _r_column(u: Word) -> np.ndarray:
    return _last_column(np.ascontiguousarray(u.codes), _zeros(len(u.alphabet)))


def r_letter(u: Word, a) -> int:
    """``r(u, a)`` for a single letter, by one sweep of the update rule."""
    code = u.alphabet.index(a)
    return int(_r_column(u)[code])


def r_word(u: Word, t: Word):
    """``r(u, t)`` as the minimum of ``r(u, a)`` over letters of ``t``; ``inf`` for ``t = ε``."""
    u, t = common(u, t)
    if not len(t):
        return INF
    col = _r_column(u)
    return int(col[np.unique(t.codes)].min())


def ell_letter(a, u: Word) -> int:
    return r_letter(reverse(u), a)


def ell_word(t: Word, u: Word):
    return r_word(reverse(u), reverse(t))


def r_vector_counted(u: Word) -> tuple[np.ndarray, int]:
    """r-vector together with the number of stack pushes made while scanning.

    The initial sentinel push is not counted, so the count is exactly ``2|u|``.
    """
    r, pushes = _r_vector(np.ascontiguousarray(u.codes), len(u.alphabet))
    return r, int(pushes)


def r_vector(u: Word) -> np.ndarray:
    """``r_i = r(a_1⋯a_{i-1}, a_i)`` for ``i = 1..|u|`` in ``O(|A| + |u|)``."""
    return r_vector_counted(u)[0]


def l_vector(u: Word) -> np.ndarray:
    """``ℓ_i = ℓ(a_i, a_{i+1}⋯a_m)``, via the r-vector of the reversed word."""
    return np.ascontiguousarray(r_vector(reverse(u))[::-1])


@dataclass(frozen=True)
class SideVectors:
    r: np.ndarray
    l: np.ndarray
    word: Word


def side_vectors(u: Word) -> SideVectors:
    return SideVectors(r_vector(u), l_vector(u), u)


def warm_up() -> None:
    """Load the compiled kernels so later timings measure only the work."""
    u = Word.from_text("AB", Alphabet(("A", "B")))
    build_r_table(u)
    r_vector(u)
    l_vector(u)
    r_letter(u, "A")
