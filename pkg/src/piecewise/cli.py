"""Command-line front end.

Exit codes: 0 on success, 1 when a check finds a mismatch, 2 on usage,
parse or budget errors.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys

from . import bench, corpus
from .binary import extremal_binary_word, max_binary_length, rho_rle
from .complexity import analyze, gap_search, h_detail, rho_detail
from .errors import PiecewiseError
from .oracle import INF, OracleBudget, delta, h_oracle, rho_oracle, shortest_distinguisher
from .side import build_l_table, build_r_table, l_vector, r_vector, warm_up
from .words import Alphabet, Word, format_rle, parse_rle

CHECK_MAX_LENGTH = 10
CHECK_MAX_ALPHABET = 3


class UsageError(Exception):
    pass


def _word(text: str, alphabet: str | None) -> Word:
    if not text and not alphabet:
        raise UsageError("the empty word needs an explicit --alphabet")
    return Word.from_text(text, Alphabet(tuple(alphabet)) if alphabet else None)


def _emit(obj, fmt: str, human: str) -> None:
    print(json.dumps(obj, sort_keys=False) if fmt == "json" else human)


def _columns(header: str, cells, width: int) -> str:
    return f"{header} |" + "".join(f"{c:>{width}}" for c in cells)


def _budget(args) -> OracleBudget | None:
    return OracleBudget(max_length=args.cap) if getattr(args, "cap", None) else None


def _delta_json(value):
    return "inf" if value == INF else value


# ---------------------------------------------------------------------------


def cmd_analyze(args) -> int:
    if args.timing:
        warm_up()
    report = analyze(_word(args.word, args.alphabet), streaming=args.streaming)
    data = report.to_dict()
    if not args.timing:
        data["micros"] = 0
    wit = data["h_witness"]
    human = "\n".join(
        [
            f"word_length  {data['word_length']}",
            f"alphabet     {''.join(data['alphabet'])}",
            f"h            {data['h']}   (split {wit['pos']}, insert {wit['symbol']})",
            f"rho          {data['rho']}   (delete position {data['rho_witness']['pos'] or '-'})",
            f"h == rho+1   {str(report.binary_identity).lower()}",
        ]
        + ([f"micros       {data['micros']}"] if args.timing else [])
    )
    _emit(data, args.format, human)
    return 0


def cmd_h(args) -> int:
    value, wit = h_detail(_word(args.word, args.alphabet), streaming=args.streaming)
    pos, symbol = wit if wit else (None, None)
    _emit({"h": value, "h_witness": {"pos": pos, "symbol": symbol}}, args.format, str(value))
    return 0


def cmd_rho(args) -> int:
    value, pos = rho_detail(_word(args.word, args.alphabet))
    _emit({"rho": value, "rho_witness": {"pos": pos}}, args.format, str(value))
    return 0


def cmd_rtable(args) -> int:
    u = _word(args.word, args.alphabet)
    table = build_r_table(u) if args.side == "r" else build_l_table(u)
    symbols = [str(s) for s in u.alphabet]
    rows = {s: table.row(s) for s in symbols}
    if args.format == "json":
        print(json.dumps({"word": str(u), "side": args.side, "alphabet": symbols, "values": rows}))
        return 0
    n = len(u)
    width = max(len(str(x)) for x in [n, *itertools.chain(*rows.values())]) + 1
    labels = [f"{args.side}(i,{s})" if args.side == "r" else f"l({s},i)" for s in symbols]
    pad = max(len(x) for x in labels + ["w"])
    # letters sit between the split points they separate
    letters = " " * (width // 2 + 1) + "".join(f"{str(c):>{width}}" for c in u)
    lines = [
        _columns("i".rjust(pad), range(n + 1), width),
        "w".rjust(pad) + " |" + letters.rstrip(),
        "-" * (pad + 2 + width * (n + 1)),
    ]
    lines += [_columns(lab.rjust(pad), rows[s], width) for lab, s in zip(labels, symbols)]
    print("\n".join(lines))
    return 0


def cmd_rvector(args) -> int:
    u = _word(args.word, args.alphabet)
    r, l = r_vector(u).tolist(), l_vector(u).tolist()
    value, _ = rho_detail(u)
    if args.format == "json":
        print(json.dumps({"word": str(u), "r": r, "l": l, "rho": value}))
        return 0
    width = max([len(str(x)) for x in r + l] + [1]) + 1
    lines = [
        _columns("        ", [str(c) for c in u], width),
        _columns("r-vector", r, width),
        _columns("l-vector", l, width),
        f"rho = {value}",
    ]
    print("\n".join(lines))
    return 0


def cmd_binary(args) -> int:
    w = parse_rle(args.rle, args.alphabet)
    value, trace = rho_rle(w)
    if args.format == "json":
        data = {"word": format_rle(w), "rho": value, "h": value + 1}
        if args.trace:
            data["trace"] = [
                {"step": s.kind, "block": s.index, "word": format_rle(x)}
                for s, x in zip([s for s in trace.steps if s.kind != "formula"], trace.words())
            ]
        print(json.dumps(data))
        return 0
    if args.trace:
        print(trace.render())
    else:
        print(f"rho = {value}\nh = {value + 1}")
    return 0


def cmd_maxlen(args) -> int:
    print(max_binary_length(args.h))
    return 0


def cmd_extremal(args) -> int:
    w = extremal_binary_word(args.h)
    print(format_rle(w, "exponent" if args.format == "exponent" else "compact"))
    return 0


def cmd_check(args) -> int:
    if not 0 <= args.max_length <= CHECK_MAX_LENGTH or not 1 <= args.alphabet_size <= CHECK_MAX_ALPHABET:
        raise UsageError(
            f"check is limited to lengths 0..{CHECK_MAX_LENGTH} and alphabet sizes 1..{CHECK_MAX_ALPHABET}"
        )
    alphabet = Alphabet(tuple("ABC"[: args.alphabet_size]))
    budget = _budget(args)
    total = h_ok = rho_ok = 0
    for n in range(args.max_length + 1):
        for codes in itertools.product(range(len(alphabet)), repeat=n):
            u = Word(codes, alphabet)
            total += 1
            h_fast, rho_fast = h_detail(u)[0], rho_detail(u)[0]
            h_ref, rho_ref = h_oracle(u, budget), rho_oracle(u, budget)
            h_ok += h_fast == h_ref
            rho_ok += rho_fast == rho_ref
            if args.verbose and (h_fast != h_ref or rho_fast != rho_ref):
                print(f"mismatch {u}: h {h_fast} vs {h_ref}, rho {rho_fast} vs {rho_ref}", file=sys.stderr)
    print(f"h: {h_ok}/{total} match, rho: {rho_ok}/{total} match")
    return 0 if h_ok == rho_ok == total else 1


def cmd_corpus(args) -> int:
    try:
        fh = open(args.path, encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {args.path}: {exc.strerror}") from None
    if args.timing:
        warm_up()
    with fh:
        records = corpus.process(
            fh, unit=args.unit, symbols=args.symbols, upper=not args.no_upper, jobs=args.jobs, timing=args.timing
        )
        writer = corpus.write_csv if args.format == "csv" else corpus.write_jsonl
        writer(records, sys.stdout)
    return 0


def cmd_bench(args) -> int:
    results = bench.run_all(args.sizes, args.algorithms, args.alphabet_size, args.seed)
    print(f"{'algorithm':<12}{'input_size':>12}{'wall_time_s':>14}{'ops_counter':>14}")
    for res in results:
        print(f"{res.algorithm:<12}{res.input_size:>12}{res.wall_time:>14.6f}{res.ops_counter:>14}")
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as out:
            bench.write_csv(results, out)
    if args.plot:
        from .plotting import scaling_figure

        scaling_figure(results, args.plot)
    return 0


def cmd_oracle(args) -> int:
    budget = _budget(args)
    if args.which in ("delta", "distinguisher"):
        u, v = _word(args.words[0], args.alphabet), _word(args.words[1], args.alphabet)
        if args.which == "delta":
            value = delta(u, v, budget)
            _emit({"delta": _delta_json(value)}, args.format, "inf" if value == INF else str(value))
        else:
            d = shortest_distinguisher(u, v, budget)
            _emit({"word": str(d.word), "side": d.side, "length": d.length}, args.format, f"{d.word} ({d.side})")
        return 0
    u = _word(args.words[0], args.alphabet)
    value = h_oracle(u, budget) if args.which == "h" else rho_oracle(u, budget)
    _emit({args.which: value}, args.format, str(value))
    return 0


def cmd_gap_search(args) -> int:
    gap, u = gap_search(args.max_length, args.alphabet or "ABC")
    print(f"max h - rho = {gap} at {u}")
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="piecewise", description="Piecewise complexity h(u) and minimality index rho(u) of words.")
    sub = ap.add_subparsers(dest="command", required=True)

    def word_cmd(name, func, help, formats=("table", "json")):
        p = sub.add_parser(name, help=help)
        p.add_argument("word")
        p.add_argument("--alphabet", help="ordered alphabet, e.g. AB (default: letters of the word)")
        p.add_argument("--format", choices=formats, default=formats[0])
        p.set_defaults(func=func)
        return p

    p = word_cmd("analyze", cmd_analyze, "h, rho and witnesses of a word")
    p.add_argument("--streaming", action="store_true", help="compute h in blocks with bounded memory")
    p.add_argument("--no-timing", dest="timing", action="store_false", help="report micros as 0")
    p = word_cmd("h", cmd_h, "piecewise complexity h(u)")
    p.add_argument("--streaming", action="store_true")
    word_cmd("rho", cmd_rho, "minimality index rho(u)")
    p = word_cmd("rtable", cmd_rtable, "r-table (or l-table) of a word")
    p.add_argument("--side", choices=("r", "l"), default="r")
    word_cmd("rvector", cmd_rvector, "r- and l-vectors of a word")

    p = sub.add_parser("binary", help="rho and h of a binary word in run-length notation")
    p.add_argument("rle", help="e.g. 'A^1 B^5 A^1' or A1B5A1")
    p.add_argument("--alphabet")
    p.add_argument("--trace", action="store_true", help="print every reduction step")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=cmd_binary)

    p = sub.add_parser("maxlen", help="longest binary word length for a given h")
    p.add_argument("h", type=int)
    p.set_defaults(func=cmd_maxlen)
    p = sub.add_parser("extremal", help="a longest binary word for a given h")
    p.add_argument("h", type=int)
    p.add_argument("--format", choices=("compact", "exponent"), default="compact")
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("check", help="exhaustively compare fast h/rho against brute force")
    p.add_argument("max_length", type=int)
    p.add_argument("alphabet_size", type=int)
    p.add_argument("--cap", type=int, help="oracle length budget")
    p.add_argument("-v", "--verbose", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("corpus", help="h and rho for every line or token of a file")
    p.add_argument("path")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--unit", choices=("line", "token"), default="line")
    p.add_argument("--symbols", choices=corpus.SYMBOL_POLICIES, default="strip", help="non-letter policy")
    p.add_argument("--no-upper", action="store_true", help="keep letter case")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--no-timing", dest="timing", action="store_false")
    p.set_defaults(func=cmd_corpus)

    p = sub.add_parser("bench", help="time algorithms on pseudo-random inputs")
    p.add_argument("--sizes", type=int, nargs="+", default=[10**5, 10**6])
    p.add_argument("--algorithms", nargs="+", choices=bench.ALGORITHMS, default=["h_table", "rho_vector"])
    p.add_argument("--alphabet-size", type=int, default=4)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--csv", help="also write results as CSV")
    p.add_argument("--plot", help="also render a log-log scaling figure (png, pdf or svg)")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("oracle", help="brute-force reference computations")
    p.add_argument("which", choices=("delta", "distinguisher", "h", "rho"))
    p.add_argument("words", nargs="+")
    p.add_argument("--alphabet")
    p.add_argument("--cap", type=int, help="oracle length budget (overrides PIECEWISE_CAP)")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gap-search", help="largest h - rho over all short words")
    p.add_argument("max_length", type=int)
    p.add_argument("--alphabet", default="ABC")
    p.set_defaults(func=cmd_gap_search)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "oracle":
        want = 2 if args.which in ("delta", "distinguisher") else 1
        if len(args.words) != want:
            parser.error(f"oracle {args.which} takes {want} word(s)")
    try:
        return args.func(args)
    except (UsageError, PiecewiseError, ValueError) as exc:
        print(f"piecewise: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
