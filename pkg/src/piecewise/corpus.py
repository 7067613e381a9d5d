"""Per-line or per-token complexity over a text file."""

from __future__ import annotations

import csv
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Iterable, Iterator, TextIO

from .complexity import h, rho
from .errors import ParseError
from .words import Word

FIELDS = ("source_id", "word_length", "alphabet_size", "h", "rho", "elapsed_micros")
SYMBOL_POLICIES = ("strip", "keep", "error")


@dataclass(frozen=True)
class CorpusRecord:
    source_id: str
    word_length: int
    alphabet_size: int
    h: int
    rho: int
    elapsed_micros: int


def normalize(text: str, symbols: str = "strip", upper: bool = True) -> str:
    """Uppercase (optionally) and apply the policy for non-letters.

    ``strip`` drops everything but ASCII letters, ``keep`` keeps every
    character, ``error`` rejects anything that is not an ASCII letter.
    """
    if upper:
        text = text.upper()
    if symbols == "keep":
        return text
    if symbols == "strip":
        return "".join(c for c in text if c.isascii() and c.isalpha())
    if symbols == "error":
        for c in text:
            if not (c.isascii() and c.isalpha()):
                raise ParseError(f"character {c!r} is not an ASCII letter")
        return text
    raise ValueError(f"unknown symbol policy {symbols!r}")


def iter_units(lines: Iterable[str], unit: str = "line") -> Iterator[tuple[str, str]]:
    """Yield ``(source_id, raw text)``; ids are ``"<line>"`` or ``"<line>:<token>"``, 1-based."""
    for ln, line in enumerate(lines, start=1):
        line = line.rstrip("\r\n")
        if unit == "line":
            yield str(ln), line
        elif unit == "token":
            for tn, token in enumerate(line.split(), start=1):
                yield f"{ln}:{tn}", token
        else:
            raise ValueError(f"unknown unit {unit!r}")


def measure(source_id: str, text: str, timing: bool = True) -> CorpusRecord:
    t0 = time.perf_counter()
    u = Word.from_text(text)
    h_value, rho_value = h(u), rho(u)
    micros = int(round((time.perf_counter() - t0) * 1e6)) if timing else 0
    return CorpusRecord(source_id, len(u), len(u.alphabet), h_value, rho_value, micros)


def _measure_packed(args):
    return measure(*args)


def process(
    lines: Iterable[str],
    unit: str = "line",
    symbols: str = "strip",
    upper: bool = True,
    jobs: int = 1,
    timing: bool = True,
) -> Iterator[CorpusRecord]:
    """One record per non-empty unit, in input order.

    Units that are empty after normalization are skipped: the empty word has
    no alphabet to infer.
    """
    work = (
        (sid, text, timing)
        for sid, raw in iter_units(lines, unit)
        if (text := normalize(raw, symbols, upper))
    )
    if jobs <= 1:
        yield from map(_measure_packed, work)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        yield from pool.map(_measure_packed, work, chunksize=64)


def write_csv(records: Iterable[CorpusRecord], out: TextIO) -> int:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(FIELDS)
    count = 0
    for rec in records:
        writer.writerow([getattr(rec, f) for f in FIELDS])
        count += 1
    return count


def write_jsonl(records: Iterable[CorpusRecord], out: TextIO) -> int:
    count = 0
    for rec in records:
        out.write(json.dumps(asdict(rec)) + "\n")
        count += 1
    return count
