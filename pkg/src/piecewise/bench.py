"""Timing harness for the scaling behaviour of each algorithm.

Input words come from a fixed 64-bit linear congruential generator so that
runs are reproducible across platforms and numpy versions.
"""

from __future__ import annotations

import csv
import time
from dataclasses import astuple, dataclass, fields
from typing import Iterable, TextIO

import numpy as np
from numba import njit

from .binary import rho_rle
from .oracle import h_oracle
from .side import build_l_table, build_r_table, r_vector_counted
from .words import Alphabet, RleWord, Word, reverse

ALGORITHMS = ("h_table", "rho_vector", "rho_rle", "oracle")

_MUL = 6364136223846793005
_INC = 1442695040888963407
_MASK = (1 << 64) - 1


@dataclass(frozen=True)
class BenchResult:
    algorithm: str
    input_size: int
    wall_time: float
    ops_counter: int


@njit(cache=True)
def _lcg_codes(n, size, seed):
    out = np.empty(n, dtype=np.uint8)
    x = np.uint64(seed)
    mul = np.uint64(6364136223846793005)
    inc = np.uint64(1442695040888963407)
    for i in range(n):
        x = x * mul + inc
        out[i] = (x >> np.uint64(33)) % np.uint64(size)
    return out


def lcg_ints(count: int, seed: int) -> list[int]:
    x, out = seed & _MASK, []
    for _ in range(count):
        x = (x * _MUL + _INC) & _MASK
        out.append(x >> 11)
    return out


def random_word(n: int, alphabet_size: int = 4, seed: int = 1) -> Word:
    alphabet = Alphabet(tuple("ABCDEFGHIJKLMNOPQRSTUVWXYZ"[:alphabet_size]))
    return Word._trusted(_lcg_codes(n, alphabet_size, seed), alphabet)


def random_rle(k: int, magnitude: int = 10**18, seed: int = 1) -> RleWord:
    """``k`` blocks with lengths drawn from ``[magnitude/2, 3*magnitude/2)``."""
    blocks = tuple(magnitude // 2 + x % magnitude for x in lcg_ints(k, seed))
    return RleWord("A" if k else None, blocks, Alphabet(("A", "B")))


def run(algorithm: str, size: int, alphabet_size: int = 4, seed: int = 1, magnitude: int = 10**18) -> BenchResult:
    if algorithm == "rho_rle":
        w = random_rle(size, magnitude, seed)
        t0 = time.perf_counter()
        rho_rle(w)
        # every phase is a single scan over the blocks
        return BenchResult(algorithm, size, time.perf_counter() - t0, w.k)
    u = random_word(size, alphabet_size, seed)
    if algorithm == "h_table":
        t0 = time.perf_counter()
        total = build_r_table(u).values.astype(np.int64) + build_l_table(u).values
        int(total.max())
        return BenchResult(algorithm, size, time.perf_counter() - t0, 2 * total.size)
    if algorithm == "rho_vector":
        t0 = time.perf_counter()
        r, pushes_r = r_vector_counted(u)
        l, pushes_l = r_vector_counted(reverse(u))
        int((r.astype(np.int64) + l[::-1]).max()) if size else 0
        return BenchResult(algorithm, size, time.perf_counter() - t0, max(pushes_r, pushes_l))
    if algorithm == "oracle":
        t0 = time.perf_counter()
        h_oracle(u)
        return BenchResult(algorithm, size, time.perf_counter() - t0, (size + 1) * alphabet_size)
    raise ValueError(f"unknown algorithm {algorithm!r}; choose from {ALGORITHMS}")


def warm_up() -> None:
    """Trigger JIT compilation so the first timed run is not skewed."""
    run("h_table", 4, 2)
    run("rho_vector", 4, 2)


def run_all(sizes: Iterable[int], algorithms: Iterable[str], alphabet_size: int = 4, seed: int = 1) -> list[BenchResult]:
    warm_up()
    return [run(a, n, alphabet_size, seed) for a in algorithms for n in sizes]


def write_csv(results: Iterable[BenchResult], out: TextIO) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow([f.name for f in fields(BenchResult)])
    for res in results:
        writer.writerow(astuple(res))
