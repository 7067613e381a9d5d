"""Definition-level brute force for Simon's congruence and the derived measures.

Nothing here is fast.  These functions enumerate subwords directly and exist
to validate the optimized code paths on small inputs, so every public entry
point checks its inputs against an :class:`OracleBudget` and raises
:class:`~piecewise.errors.CapExceeded` instead of running away.

Distances are ``int`` or ``math.inf``; ``inf`` only arises for equal words.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

from .errors import CapExceeded, NoDistinguisher
from .words import Word, common, subword_codes

INF = math.inf
CAP_ENV = "PIECEWISE_CAP"


@dataclass(frozen=True)
class OracleBudget:
    max_length: int = 12
    max_alphabet: int = 4

    @classmethod
    def from_env(cls) -> OracleBudget:
        raw = os.environ.get(CAP_ENV)
        if raw is None:
            return cls()
        try:
            return cls(max_length=int(raw))
        except ValueError:
            raise ValueError(f"{CAP_ENV} must be an integer word length, got {raw!r}") from None

    def check(self, *words: Word) -> None:
        for w in words:
            if len(w) > self.max_length:
                raise CapExceeded(f"oracle input of length {len(w)} exceeds budget {self.max_length}")
            if len(w.alphabet) > self.max_alphabet:
                raise CapExceeded(f"oracle alphabet of size {len(w.alphabet)} exceeds budget {self.max_alphabet}")


def _budget(budget: OracleBudget | None) -> OracleBudget:
    return budget if budget is not None else OracleBudget.from_env()


@dataclass(frozen=True)
class Distinguisher:
    word: Word
    side: str  # "left" or "right": the input the word embeds into

    @property
    def length(self) -> int:
        return len(self.word)


def _next_table(codes: tuple, size: int) -> list[list[int]]:
    # nxt[i][c]: first position >= i holding c, or len(codes)
    n = len(codes)
    nxt = [[n] * size for _ in range(n + 1)]
    for i in range(n - 1, -1, -1):
        row = nxt[i]
        row[:] = nxt[i + 1]
        row[codes[i]] = i
    return nxt


def _grow(layer: dict, nxt: list[list[int]], size: int, n: int) -> dict:
    # layer maps each subword of length L to the end of its greedy embedding
    grown = {}
    for s, end in layer.items():
        row = nxt[end]
        for c in range(size):
            p = row[c]
            if p < n:
                grown[s + (c,)] = p + 1
    return grown


def _distinguisher_codes(cu: tuple, cv: tuple, size: int) -> tuple[tuple, int]:
    """Shortest distinguisher as (codes, 0 for left / 1 for right)."""
    if cu == cv:
        raise NoDistinguisher("equal words have no distinguisher")
    nu, nv = _next_table(cu, size), _next_table(cv, size)
    lu, lv = {(): 0}, {(): 0}
    while True:
        lu = _grow(lu, nu, size, len(cu))
        lv = _grow(lv, nv, size, len(cv))
        candidates = [(s, 0) for s in lu.keys() - lv.keys()] + [(s, 1) for s in lv.keys() - lu.keys()]
        if candidates:
            return min(candidates)


def _delta_codes(cu: tuple, cv: tuple, size: int):
    if cu == cv:
        return INF
    return len(_distinguisher_codes(cu, cv, size)[0]) - 1


def simon_equiv(u: Word, v: Word, k: int, budget: OracleBudget | None = None) -> bool:
    """``u ~k v``: same subwords of length at most ``k``, compared as sets."""
    if k < 0:
        raise ValueError("k must be non-negative")
    _budget(budget).check(u, v)
    u, v = common(u, v)
    return subword_codes(u.to_tuple(), k) == subword_codes(v.to_tuple(), k)


def shortest_distinguisher(u: Word, v: Word, budget: OracleBudget | None = None) -> Distinguisher:
    """A length-minimal word embedding in exactly one of ``u`` and ``v``.

    Candidates are searched by increasing length among subwords of the two
    inputs; ties go to the lexicographically smallest word in alphabet order.
    """
    _budget(budget).check(u, v)
    u, v = common(u, v)
    codes, side = _distinguisher_codes(u.to_tuple(), v.to_tuple(), len(u.alphabet))
    return Distinguisher(Word(codes, u.alphabet), ("left", "right")[side])


def delta(u: Word, v: Word, budget: OracleBudget | None = None):
    """Subword distance: ``inf`` if equal, else shortest distinguisher length minus one."""
    _budget(budget).check(u, v)
    u, v = common(u, v)
    return _delta_codes(u.to_tuple(), v.to_tuple(), len(u.alphabet))


def r_oracle(u: Word, t: Word, budget: OracleBudget | None = None):
    """``r(u,t) = δ(u, ut)``."""
    _budget(budget).check(u, t)
    u, t = common(u, t)
    cu = u.to_tuple()
    return _delta_codes(cu, cu + t.to_tuple(), len(u.alphabet))


def ell_oracle(t: Word, u: Word, budget: OracleBudget | None = None):
    """``ℓ(t,u) = δ(tu, u)``."""
    _budget(budget).check(t, u)
    t, u = common(t, u)
    cu = u.to_tuple()
    return _delta_codes(t.to_tuple() + cu, cu, len(u.alphabet))


def arch_factorization_k(u: Word, v: Word) -> int:
    """Largest ``k`` with ``u = u1⋯uk`` and ``alph(u1) ⊇ ⋯ ⊇ alph(uk) ⊇ alph(v)``.

    Peels shortest suffixes from the right: a shortest suffix has the smallest
    alphabet and leaves the longest remainder, so greedy peeling is optimal.
    For ``v = ε`` every factorization qualifies and the result is capped at
    ``|u|``.
    """
    u, v = common(u, v)
    codes = u.to_tuple()
    need = set(v.to_tuple())
    if not need:
        return len(codes)
    k, end = 0, len(codes)
    while True:
        seen, p = set(), end
        while p > 0 and not need <= seen:
            p -= 1
            seen.add(codes[p])
        if not need <= seen:
            return k
        k, need, end = k + 1, seen, p


def h_oracle(u: Word, budget: OracleBudget | None = None) -> int:
    """``1 + max δ(u, u1 a u2)`` over every single-letter insertion."""
    _budget(budget).check(u)
    size = len(u.alphabet)
    if size == 0:
        return 0
    cu = u.to_tuple()
    longer = {cu[:i] + (a,) + cu[i:] for i in range(len(cu) + 1) for a in range(size)}
    return 1 + max(_delta_codes(cu, w, size) for w in longer)


def rho_oracle(u: Word, budget: OracleBudget | None = None) -> int:
    """``1 + max δ(u, u1 u2)`` over every single-letter deletion; 0 for ε.

    Single deletions suffice: if ``u ~m u'`` for a strict subword ``u'`` then
    every ``w`` with ``u' ⊑ w ⊑ u`` is ``~m``-equivalent to ``u`` as well, in
    particular some ``w`` one letter shorter than ``u``.
    """
    _budget(budget).check(u)
    cu = u.to_tuple()
    if not cu:
        return 0
    shorter = {cu[:i] + cu[i + 1:] for i in range(len(cu))}
    return 1 + max(_delta_codes(cu, w, len(u.alphabet)) for w in shorter)


def rho_oracle_full(u: Word, budget: OracleBudget | None = None) -> int:
    """Minimality index by searching all strict subwords, not just deletions."""
    _budget(budget).check(u)
    cu = u.to_tuple()
    strict = subword_codes(cu) - {cu}
    return 1 + max((_delta_codes(cu, w, len(u.alphabet)) for w in strict), default=-1)
