"""Alphabets, words, run-length encoded binary words and the subword relation.

Symbols are stored as small integer ids (their index in the alphabet) inside a
read-only numpy array, so the numeric kernels elsewhere in the package can
index tables by symbol directly.  The text form of a word is one character
per symbol.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import AlphabetError, CapExceeded, ParseError

DEFAULT_CLOSURE_CAP = 10**6
DEFAULT_SHUFFLE_LENGTH = 16


@dataclass(frozen=True)
class Alphabet:
    """Ordered set of distinct symbols.

    The order fixes symbol ids and every tie-break in the package.  The empty
    alphabet is legal but only the empty word can be written over it.
    """

    symbols: tuple
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        symbols = tuple(self.symbols)
        index = {s: i for i, s in enumerate(symbols)}
        if len(index) != len(symbols):
            raise AlphabetError(f"duplicate symbols in alphabet {symbols!r}")
        object.__setattr__(self, "symbols", symbols)
        object.__setattr__(self, "_index", index)

    @classmethod
    def of(cls, text: Iterable) -> Alphabet:
        """Alphabet of the distinct symbols in ``text``, in sorted order."""
        return cls(tuple(sorted(set(text))))

    def __len__(self):
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __contains__(self, symbol):
        return symbol in self._index

    def __str__(self):
        return "".join(map(str, self.symbols))

    def index(self, symbol) -> int:
        try:
            return self._index[symbol]
        except KeyError:
            raise AlphabetError(f"symbol {symbol!r} not in alphabet {self}") from None

    def union(self, other: Alphabet) -> Alphabet:
        if other == self:
            return self
        extra = tuple(s for s in other.symbols if s not in self._index)
        return Alphabet(self.symbols + extra)

    @property
    def dtype(self):
        return np.uint8 if len(self.symbols) <= 256 else np.int32


def _freeze(codes: np.ndarray) -> np.ndarray:
    codes.setflags(write=False)
    return codes


class Word:
    """A finite word over an explicit alphabet.

    ``codes`` holds symbol ids.  Words are immutable, hashable and compare
    equal when both the symbol sequence and the alphabet agree.
    """

    __slots__ = ("codes", "alphabet")

    def __init__(self, codes, alphabet: Alphabet):
        arr = np.array(codes, dtype=alphabet.dtype).reshape(-1)
        if arr.size and (int(arr.max()) >= len(alphabet) or int(arr.min()) < 0):
            raise AlphabetError(f"symbol id out of range for alphabet {alphabet}")
        self.codes = _freeze(arr)
        self.alphabet = alphabet

    @classmethod
    def _trusted(cls, codes: np.ndarray, alphabet: Alphabet) -> Word:
        word = cls.__new__(cls)
        word.codes = _freeze(np.ascontiguousarray(codes, dtype=alphabet.dtype))
        word.alphabet = alphabet
        return word

    @classmethod
    def from_text(cls, text: str, alphabet: Alphabet | str | None = None) -> Word:
        """Parse ``text`` one character per symbol.

        Without an explicit alphabet the alphabet is ``alph(text)`` in sorted
        order.
        """
        if alphabet is None:
            alphabet = Alphabet.of(text)
        elif not isinstance(alphabet, Alphabet):
            alphabet = Alphabet(tuple(alphabet))
        if text.isascii() and all(isinstance(s, str) and len(s) == 1 and s.isascii() for s in alphabet):
            lut = np.full(128, -1, dtype=np.int32)
            for i, s in enumerate(alphabet):
                lut[ord(s)] = i
            raw = np.frombuffer(text.encode("ascii"), dtype=np.uint8)
            codes = lut[raw]
            bad = codes < 0
            if bad.any():
                pos = int(np.flatnonzero(bad)[0])
                raise AlphabetError(f"symbol {text[pos]!r} at position {pos} not in alphabet {alphabet}")
            return cls._trusted(codes, alphabet)
        return cls._trusted(np.array([alphabet.index(c) for c in text], dtype=alphabet.dtype), alphabet)

    @classmethod
    def from_symbols(cls, symbols: Sequence, alphabet: Alphabet) -> Word:
        return cls._trusted(np.array([alphabet.index(s) for s in symbols], dtype=alphabet.dtype), alphabet)

    def __len__(self):
        return self.codes.shape[0]

    def __eq__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        return self.alphabet == other.alphabet and np.array_equal(self.codes, other.codes)

    def __hash__(self):
        return hash((self.alphabet.symbols, self.codes.tobytes()))

    def __str__(self):
        symbols = self.alphabet.symbols
        return "".join(str(symbols[c]) for c in self.codes.tolist())

    def __repr__(self):
        return f"Word({str(self)!r}, alphabet={str(self.alphabet)!r})"

    def __getitem__(self, item):
        if isinstance(item, slice):
            return Word._trusted(self.codes[item], self.alphabet)
        return self.alphabet.symbols[int(self.codes[item])]

    def __add__(self, other: Word) -> Word:
        if other.alphabet != self.alphabet:
            alphabet = self.alphabet.union(other.alphabet)
            left, right = recode(self, alphabet), recode(other, alphabet)
            return Word._trusted(np.concatenate([left.codes, right.codes]), alphabet)
        return Word._trusted(np.concatenate([self.codes, other.codes]), self.alphabet)

    def to_tuple(self) -> tuple:
        return tuple(self.codes.tolist())

    def count(self, symbol) -> int:
        """Number of occurrences ``|u|_a``."""
        return int(np.count_nonzero(self.codes == self.alphabet.index(symbol)))

    def alph(self) -> frozenset:
        """Set of symbols actually occurring in the word."""
        return frozenset(self.alphabet.symbols[c] for c in np.unique(self.codes).tolist())

    def factor(self, i: int, j: int) -> Word:
        """The factor ``u(i,j)``: letters at 1-based positions ``i+1..j``."""
        if not 0 <= i <= j <= len(self):
            raise IndexError(f"invalid factor bounds ({i}, {j}) for length {len(self)}")
        return self[i:j]

    def letter(self, i: int):
        """The ``i``-th letter, 1-based."""
        if not 1 <= i <= len(self):
            raise IndexError(i)
        return self[i - 1]

    def insert(self, pos: int, symbol) -> Word:
        code = self.alphabet.index(symbol)
        return Word._trusted(np.insert(self.codes, pos, code), self.alphabet)

    def delete(self, pos: int) -> Word:
        return Word._trusted(np.delete(self.codes, pos), self.alphabet)


def word(text: str, alphabet: Alphabet | str | None = None) -> Word:
    """Shorthand for :meth:`Word.from_text`."""
    return Word.from_text(text, alphabet)


def recode(u: Word, alphabet: Alphabet) -> Word:
    """Re-express ``u`` over a larger (or equal) alphabet."""
    if u.alphabet == alphabet:
        return u
    lut = np.array([alphabet.index(s) for s in u.alphabet.symbols], dtype=np.int64)
    codes = lut[u.codes] if len(u) else np.zeros(0, dtype=np.int64)
    return Word._trusted(codes, alphabet)


def common(*words: Word) -> tuple[Word, ...]:
    """Bring words onto the union of their alphabets."""
    alphabet = words[0].alphabet
    for w in words[1:]:
        alphabet = alphabet.union(w.alphabet)
    return tuple(recode(w, alphabet) for w in words)


def embeds(small: Sequence, big: Sequence) -> bool:
    it = iter(big)
    return all(c in it for c in small)


def is_subword(u: Word, v: Word) -> bool:
    """True iff ``u`` is a (scattered) subword of ``v``; greedy left-to-right scan."""
    u, v = common(u, v)
    return embeds(u.to_tuple(), v.to_tuple())


def subword_codes(codes: Sequence[int], k: int | None = None, cap: int = DEFAULT_CLOSURE_CAP) -> set[tuple]:
    """All subwords of ``codes`` of length at most ``k`` as tuples of ids."""
    if k is None:
        k = len(codes)
    found = {()}
    for c in codes:
        grown = {s + (c,) for s in found if len(s) < k}
        found |= grown
        if len(found) > cap:
            raise CapExceeded(f"downward closure exceeds {cap} elements")
    return found


def downward_closure(u: Word, k: int | None = None, cap: int = DEFAULT_CLOSURE_CAP) -> frozenset[Word]:
    """The set ``{s : s ⊑ u, |s| ≤ k}``; ``k=None`` gives the full closure."""
    if k is not None and k < 0:
        raise ValueError("k must be non-negative")
    return frozenset(Word(s, u.alphabet) for s in subword_codes(u.to_tuple(), k, cap))


def shuffle_set(u: Word, v: Word, max_length: int = DEFAULT_SHUFFLE_LENGTH) -> frozenset[Word]:
    """Every interleaving of ``u`` and ``v``."""
    u, v = common(u, v)
    n = len(u) + len(v)
    if n > max_length:
        raise CapExceeded(f"shuffle of total length {n} exceeds cap {max_length}")
    cu, cv = u.to_tuple(), v.to_tuple()
    out = set()
    for slots in itertools.combinations(range(n), len(cu)):
        chosen = set(slots)
        iu, iv = iter(cu), iter(cv)
        out.add(tuple(next(iu) if p in chosen else next(iv) for p in range(n)))
    return frozenset(Word(w, u.alphabet) for w in out)


def reverse(u: Word) -> Word:
    return Word._trusted(u.codes[::-1], u.alphabet)


def letter_swap(u: Word) -> Word:
    """Exchange the two letters of a binary alphabet."""
    if len(u.alphabet) != 2:
        raise AlphabetError("letter_swap needs a two-letter alphabet")
    return Word._trusted(1 - u.codes, u.alphabet)


# ---------------------------------------------------------------------------
# Run-length encoded binary words


@dataclass(frozen=True)
class RleWord:
    """Binary word ``a1^n1 a2^n2 ... ak^nk`` with strictly alternating letters.

    ``blocks`` are arbitrary-precision positive integers.  ``first_symbol`` is
    ``None`` exactly for the empty word.
    """

    first_symbol: object
    blocks: tuple
    alphabet: Alphabet

    def __post_init__(self):
        blocks = tuple(int(n) for n in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        if any(n < 1 for n in blocks):
            raise ParseError(f"block lengths must be positive, got {blocks}")
        if len(self.alphabet) > 2:
            raise AlphabetError("run-length words are over at most two letters")
        if not blocks:
            if self.first_symbol is not None:
                raise ParseError("empty run-length word has no first symbol")
            return
        if self.first_symbol not in self.alphabet:
            raise AlphabetError(f"first symbol {self.first_symbol!r} not in {self.alphabet}")
        if len(blocks) > 1 and len(self.alphabet) != 2:
            raise AlphabetError("alternating blocks need a two-letter alphabet")

    @property
    def k(self) -> int:
        return len(self.blocks)

    @property
    def length(self) -> int:
        """Word length as an unbounded int (``len()`` overflows past ``sys.maxsize``)."""
        return sum(self.blocks)

    def __len__(self):
        return self.length

    def symbol(self, i: int):
        """Letter of block ``i`` (0-based)."""
        first = self.alphabet.index(self.first_symbol)
        return self.alphabet.symbols[(first + i) % 2] if i % 2 else self.first_symbol

    def with_blocks(self, blocks: Sequence[int]) -> RleWord:
        """Same first letter and alphabet, new block lengths (possibly empty)."""
        blocks = tuple(blocks)
        return RleWord(self.first_symbol if blocks else None, blocks, self.alphabet)

    def cumulative(self) -> list[int]:
        """``λ_0 = 0, λ_1, ..., λ_k``: cumulative block lengths."""
        return [0, *itertools.accumulate(self.blocks)]

    def __str__(self):
        return format_rle(self)


def rle_encode(u: Word) -> RleWord:
    used = sorted(np.unique(u.codes).tolist())
    if len(used) > 2:
        raise AlphabetError("run-length encoding needs at most two distinct letters")
    alphabet = u.alphabet if len(u.alphabet) <= 2 else Alphabet(tuple(u.alphabet.symbols[c] for c in used))
    if not len(u):
        return RleWord(None, (), alphabet)
    codes = u.codes.astype(np.int64)
    starts = np.flatnonzero(np.diff(codes)) + 1
    edges = np.concatenate([[0], starts, [len(codes)]])
    return RleWord(u[0], tuple(np.diff(edges).tolist()), alphabet)


def rle_decode(w: RleWord) -> Word:
    if not w.blocks:
        return Word._trusted(np.zeros(0, dtype=w.alphabet.dtype), w.alphabet)
    first = w.alphabet.index(w.first_symbol)
    letters = (first + np.arange(w.k)) % 2
    return Word._trusted(np.repeat(letters, w.blocks), w.alphabet)


_RLE_TOKEN = re.compile(r"\s*([^\s\d^(){}])\s*(?:\^?\s*(?:(\d+)|\{\s*(\d+)\s*\}|\(\s*(\d+)\s*\)))?\s*")


def parse_rle(text: str, alphabet: Alphabet | str | None = None) -> RleWord:
    """Parse ``A^1 B^5 A^1``, ``A1B5A1`` or ``A^{34}B^{23}``; exponents default to 1."""
    pos, letters, blocks = 0, [], []
    text = text.strip()
    while pos < len(text):
        m = _RLE_TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"cannot parse run-length text at offset {pos}: {text[pos:]!r}")
        symbol, *exps = m.groups()
        exp = next((e for e in exps if e is not None), "1")
        if int(exp) < 1:
            raise ParseError(f"block exponent must be positive: {symbol}^{exp}")
        if letters and letters[-1] == symbol:
            raise ParseError(f"letters must strictly alternate, {symbol!r} repeats")
        letters.append(symbol)
        blocks.append(int(exp))
        pos = m.end()
    distinct = list(dict.fromkeys(letters))
    if len(distinct) > 2:
        raise ParseError(f"run-length words are binary, got letters {distinct}")
    if any(letters[i] != letters[i % 2] for i in range(len(letters))):
        raise ParseError("letters must strictly alternate")
    if alphabet is None:
        alphabet = Alphabet(tuple(distinct))
    elif not isinstance(alphabet, Alphabet):
        alphabet = Alphabet(tuple(alphabet))
    for s in distinct:
        alphabet.index(s)
    return RleWord(letters[0] if letters else None, tuple(blocks), alphabet)


def format_rle(w: RleWord, style: str = "compact") -> str:
    """``A4B5A5B4`` (compact) or ``A^4 B^5 A^5 B^4`` (exponent)."""
    parts = [(w.symbol(i), n) for i, n in enumerate(w.blocks)]
    if style == "exponent":
        return " ".join(f"{s}^{n}" for s, n in parts) or "ε"
    return "".join(f"{s}{n}" for s, n in parts)
