"""ρ and h of binary words given by their run-length blocks.

The reduction has three phases:

1. delete adjacent pairs of unit blocks (each deletion lowers ρ by exactly 1);
2. rewrite every remaining interior unit block ``X^m Y X^n`` as
   ``X^(m+1) Y^(n+1)`` with the rest of the word letter-swapped, which keeps ρ
   (in block notation the swap is implicit, blocks just keep alternating);
3. evaluate the closed formula for words without interior unit blocks.

All arithmetic is on Python integers, so block lengths like ``10**30`` are
fine and the cost is linear in the number of blocks.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PatternNotFound, ReductionRequired
from .words import Alphabet, RleWord, format_rle

PAIR = "pair_removal"
SWAP = "isolated_swap"
FORMULA = "formula"


@dataclass(frozen=True)
class Step:
    """One reduction step; ``index`` is the 0-based block index it acts on."""

    kind: str
    index: int | None = None
    blocks: tuple = ()


def apply_step(w: RleWord, step: Step) -> RleWord:
    b = w.blocks
    i = step.index
    if step.kind == PAIR:
        if not (0 <= i < len(b) - 1 and b[i] == 1 and b[i + 1] == 1):
            raise ValueError(f"no isolated pair at block {i} of {w}")
        # flanking blocks i-1 and i+2 carry different letters, never merged
        assert i == 0 or i + 2 >= len(b) or (i - 1) % 2 != (i + 2) % 2
        return w.with_blocks(b[:i] + b[i + 2:])
    if step.kind == SWAP:
        if not (0 < i < len(b) - 1 and b[i] == 1 and b[i - 1] >= 2 and b[i + 1] >= 2):
            raise ValueError(f"no flanked isolated letter at block {i} of {w}")
        return w.with_blocks(b[:i - 1] + (b[i - 1] + 1, b[i + 1] + 1) + b[i + 2:])
    if step.kind == FORMULA:
        return w
    raise ValueError(f"unknown step kind {step.kind!r}")


def rho_formula(w: RleWord) -> int:
    """Closed form ``k + max(n1+1, nk+1, n2, …, n(k-1)) - 3``.

    Valid when every interior block has length at least 2; ``k = 1`` gives
    ``n1`` and the empty word gives 0.
    """
    b = w.blocks
    k = len(b)
    if k == 0:
        return 0
    if k == 1:
        return b[0]
    if any(n < 2 for n in b[1:-1]):
        raise ReductionRequired(f"interior unit block in {w}; reduce isolated letters first")
    return k + max(b[0] + 1, b[-1] + 1, *b[1:-1]) - 3


def _pairs(blocks: tuple, order: str) -> tuple[list, list]:
    out, steps = [], []
    if order == "leftmost":
        for n in blocks:
            out.append(n)
            if len(out) >= 2 and out[-1] == 1 and out[-2] == 1:
                steps.append(len(out) - 2)
                del out[-2:]
        return out, steps
    if order == "rightmost":
        k = len(blocks)
        for consumed, n in enumerate(reversed(blocks), start=1):
            out.append(n)
            if len(out) >= 2 and out[-1] == 1 and out[-2] == 1:
                steps.append(k - consumed)
                del out[-2:]
        return out[::-1], steps
    raise ValueError(f"order must be 'leftmost' or 'rightmost', got {order!r}")


def remove_isolated_pairs(w: RleWord, order: str = "leftmost") -> tuple[RleWord, int]:
    """Delete adjacent unit-block pairs until none remain.

    Returns the reduced word and the number of deletions, which is
    ``ρ(w) - ρ(reduced)`` whatever the removal order.
    """
    out, steps = _pairs(w.blocks, order)
    return w.with_blocks(out), len(steps)


def eliminate_isolated_letter(w: RleWord) -> RleWord:
    """Rewrite the leftmost ``X^m Y^1 X^n`` (``m, n ≥ 2``) as ``X^(m+1) Y^(n+1)``."""
    b = w.blocks
    for i in range(1, len(b) - 1):
        if b[i] == 1 and b[i - 1] >= 2 and b[i + 1] >= 2:
            return apply_step(w, Step(SWAP, i))
    raise PatternNotFound(f"no isolated letter between longer blocks in {w}")


def _swaps(blocks: list) -> tuple[list, list]:
    # one left-to-right pass finds every leftmost rewrite in turn: a rewrite
    # only lengthens blocks, so it never enables a pattern further left
    out, steps = [], []
    i, k = 0, len(blocks)
    while i < k:
        n = blocks[i]
        if n == 1 and out and i + 1 < k and out[-1] >= 2 and blocks[i + 1] >= 2:
            steps.append(len(out))
            out[-1] += 1
            out.append(blocks[i + 1] + 1)
            i += 2
        else:
            out.append(n)
            i += 1
    return out, steps


@dataclass(frozen=True)
class ReductionTrace:
    initial_word: RleWord
    steps: tuple
    rho_increments: int
    formula_value: int
    final_word: RleWord

    @property
    def rho(self) -> int:
        return self.rho_increments + self.formula_value

    def words(self) -> list[RleWord]:
        """The word after each rewriting step, by replaying the steps."""
        out, w = [], self.initial_word
        for step in self.steps:
            if step.kind != FORMULA:
                w = apply_step(w, step)
                out.append(w)
        return out

    def replay(self) -> RleWord:
        w = self.initial_word
        for step in self.steps:
            w = apply_step(w, step)
        return w

    def render(self) -> str:
        """Human-readable trace in exponent notation."""
        lines = [f"u = {format_rle(self.initial_word, 'exponent')}"]
        w = self.initial_word
        for step in self.steps:
            if step.kind == PAIR:
                w = apply_step(w, step)
                lines.append(f"  remove isolated pair at blocks {step.index + 1},{step.index + 2}: {format_rle(w, 'exponent')}")
            elif step.kind == SWAP:
                w = apply_step(w, step)
                lines.append(f"  eliminate isolated letter at block {step.index + 1}: {format_rle(w, 'exponent')}")
            else:
                b = step.blocks
                if len(b) >= 2:
                    terms = [f"{b[0]}+1", *map(str, b[1:-1]), f"{b[-1]}+1"]
                    lines.append(f"  formula: {len(b)} + max({', '.join(terms)}) - 3 = {self.formula_value}")
                else:
                    lines.append(f"  formula: {self.formula_value}")
        lines.append(f"rho(u) = {self.rho_increments} + {self.formula_value} = {self.rho}, h(u) = {self.rho + 1}")
        return "\n".join(lines)


def rho_rle(w: RleWord) -> tuple[int, ReductionTrace]:
    """ρ of a binary word in run-length form, with the full reduction trace."""
    after_pairs, pair_steps = _pairs(w.blocks, "leftmost")
    final_blocks, swap_steps = _swaps(after_pairs)
    final = w.with_blocks(final_blocks)
    value = rho_formula(final)
    steps = (
        [Step(PAIR, i) for i in pair_steps]
        + [Step(SWAP, i) for i in swap_steps]
        + [Step(FORMULA, None, final.blocks)]
    )
    trace = ReductionTrace(w, tuple(steps), len(pair_steps), value, final)
    return trace.rho, trace


def h_rle(w: RleWord) -> int:
    """Over at most two letters ``h = ρ + 1``."""
    return rho_rle(w)[0] + 1


def max_binary_length(h: int) -> int:
    """Longest binary word with piecewise complexity ``h``: ``⌊h²/4⌋ + h - 1``."""
    if h < 1:
        raise ValueError("h must be at least 1")
    return h * h // 4 + h - 1


def extremal_binary_word(h: int, alphabet: Alphabet | str = "AB") -> RleWord:
    """A binary word of maximal length among those with complexity ``h``."""
    if h < 2:
        raise ValueError("h must be at least 2")
    if not isinstance(alphabet, Alphabet):
        alphabet = Alphabet(tuple(alphabet))
    g = (h + 1) // 2
    if h % 2 == 0:
        blocks = (g,) + (g + 1,) * (g - 1) + (g,)
    else:
        blocks = (g,) + (g + 1,) * (g - 2) + (g,)
    return RleWord(alphabet.symbols[0], blocks, alphabet)
