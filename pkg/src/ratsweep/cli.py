"""Command-line interface: sweep, invert, enumerate, verify, area, render.

Exit codes: 0 on success, 1 on invalid input (non-coprime pair, malformed
word, non-Dyck word, bad flags), 2 on an internal invariant violation
(termination cap, uniqueness assertion, oracle mismatch).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .core import (
    CoprimePair,
    InvalidInputError,
    InvariantViolation,
    area,
    format_ranks,
    format_word,
    parse_ranks,
    parse_word,
    sweep,
)
from .diagram import build_diagram
from .inversion import (
    TRACE_LEVELS,
    canonical_start,
    invert_with_trace,
    strict_cover,
    strong_find_rank,
    weak_find_rank,
)
from .oracle import coprime_pairs, enumerate_dyck, verify_bijection
from .render import FORMATS, TRACE_MODES, render_diagram, render_path, render_trace
from .report import write_report


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; bad arguments are invalid input."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _add_pair(parser) -> None:
    parser.add_argument("-m", type=int, required=True, help="rank increment per North step")
    parser.add_argument("-n", type=int, required=True, help="rank decrement per East step")


def _add_word(parser) -> None:
    parser.add_argument("word", help="word over SW or NE; '-' reads it from stdin")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ratsweep", description="Rational (m,n) sweep map toolkit.")
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="structured output")
    common.add_argument(
        "--alphabet",
        choices=("sw", "ne"),
        default="sw",
        help="output alphabet (input is auto-detected)",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("sweep", parents=[common], help="sweep image of a Dyck word")
    _add_pair(p)
    _add_word(p)

    p = sub.add_parser("invert", parents=[common], help="pre-image under the sweep map")
    _add_pair(p)
    p.add_argument("--algorithm", choices=("weak", "strong"), default="strong")
    p.add_argument("--trace", choices=TRACE_LEVELS, default="none", help="trace verbosity")
    p.add_argument("--trace-file", type=Path, help="write the trace document here")
    p.add_argument("--start", help="comma-separated starting ranks (default: canonical)")
    _add_word(p)

    p = sub.add_parser("enumerate", parents=[common], help="all (m,n)-Dyck words")
    _add_pair(p)
    p.add_argument("--count-only", action="store_true")

    p = sub.add_parser("verify", parents=[common], help="verify bijectivity and identities")
    p.add_argument("-m", type=int, help="rank increment per North step")
    p.add_argument("-n", type=int, help="rank decrement per East step")
    p.add_argument("--max-sum", type=int, help="verify every coprime pair with m+n <= K")
    p.add_argument("--report-dir", type=Path, help="write CSV tables and figures here")
    p.add_argument("--no-figures", action="store_true", help="skip the PNG figures")

    p = sub.add_parser("area", parents=[common], help="area statistic of a Dyck word")
    _add_pair(p)
    _add_word(p)

    p = sub.add_parser("render", parents=[common], help="draw a path, diagram, or trace")
    p.add_argument("kind", choices=("path", "diagram", "trace"))
    _add_pair(p)
    p.add_argument("--format", choices=FORMATS, default="ascii")
    p.add_argument("-o", "--output", type=Path, help="output file (default stdout)")
    p.add_argument(
        "--ranks",
        help="diagram ranks, comma-separated (default: strict cover of the canonical start)",
    )
    p.add_argument("--algorithm", choices=("weak", "strong"), default="strong")
    p.add_argument("--start", help="trace starting ranks, comma-separated")
    p.add_argument("--mode", choices=TRACE_MODES, default="panels")
    _add_word(p)

    return parser


def _word_arg(raw: str) -> str:
    if raw == "-":
        raw = sys.stdin.read()
    return parse_word(raw)


def _pair_arg(args) -> CoprimePair:
    return CoprimePair(args.m, args.n)


def _emit(text: str, target: Path | None) -> None:
    if target is None:
        sys.stdout.write(text)
    else:
        target.write_text(text, encoding="utf-8")


def _cmd_sweep(args) -> int:
    pair = _pair_arg(args)
    word = _word_arg(args.word)
    image = format_word(sweep(word, pair), args.alphabet)
    if args.json:
        print(json.dumps({"m": pair.m, "n": pair.n, "word": format_word(word, args.alphabet), "sweep": image}))
    else:
        print(image)
    return 0


def _trace_document(trace, alphabet: str) -> dict:
    document = trace.to_json_dict()
    document["header"]["word"] = format_word(document["header"]["word"], alphabet)
    if document["footer"]["preimage"] is not None:
        document["footer"]["preimage"] = format_word(document["footer"]["preimage"], alphabet)
    return document


def _cmd_invert(args) -> int:
    pair = _pair_arg(args)
    word = _word_arg(args.word)
    start = parse_ranks(args.start) if args.start else None
    preimage, _, trace = invert_with_trace(
        word, pair, args.algorithm, start=start, trace_level=args.trace
    )
    formatted = format_word(preimage, args.alphabet)
    document = _trace_document(trace, args.alphabet) if args.trace != "none" else None
    if document is not None and args.trace_file is not None:
        args.trace_file.write_text(json.dumps(document, indent=2) + "\n", encoding="utf-8")
        document = None
    if args.json:
        payload = {
            "m": pair.m,
            "n": pair.n,
            "word": format_word(word, args.alphabet),
            "algorithm": args.algorithm,
            "preimage": formatted,
            "steps": trace.step_count,
        }
        if document is not None:
            payload["trace"] = document
        print(json.dumps(payload))
    elif document is not None:
        print(json.dumps(document, indent=2))
    else:
        print(formatted)
    return 0


def _cmd_enumerate(args) -> int:
    pair = _pair_arg(args)
    words = enumerate_dyck(pair)
    if args.json:
        payload = {"m": pair.m, "n": pair.n, "count": len(words)}
        if not args.count_only:
            payload["words"] = [format_word(w, args.alphabet) for w in words]
        print(json.dumps(payload))
    elif args.count_only:
        print(len(words))
    else:
        for word in words:
            print(format_word(word, args.alphabet))
    return 0


def _cmd_verify(args) -> int:
    if args.max_sum is not None:
        if args.m is not None or args.n is not None:
            raise InvalidInputError("use either -m/-n or --max-sum, not both")
        pairs = coprime_pairs(args.max_sum)
    else:
        if args.m is None or args.n is None:
            raise InvalidInputError("verify needs -m and -n, or --max-sum")
        pairs = [CoprimePair(args.m, args.n)]
    reports = [verify_bijection(pair) for pair in pairs]
    if args.report_dir is not None:
        write_report(reports, args.report_dir, figures=not args.no_figures)
    if args.json:
        print(json.dumps({"reports": [report.to_json_dict() for report in reports]}))
    else:
        for report in reports:
            ratio = report.step_ratio
            print(
                f"({report.pair.m},{report.pair.n}): paths={report.path_count} "
                f"bijection={'ok' if report.bijection_ok else 'FAILED'} "
                f"max_weak={report.max_weak_steps} max_strong={report.max_strong_steps} "
                f"ratio={'n/a' if ratio is None else f'{ratio:.2f}'} "
                f"elapsed={report.elapsed:.3f}s"
            )
            for failure in report.identity_failures:
                print(f"  ! {failure}")
    return 0 if all(report.bijection_ok for report in reports) else 2


def _cmd_area(args) -> int:
    pair = _pair_arg(args)
    word = _word_arg(args.word)
    cells = area(word, pair)
    if args.json:
        print(json.dumps({"m": pair.m, "n": pair.n, "word": format_word(word, args.alphabet), "area": cells}))
    else:
        print(cells)
    return 0


def _cmd_render(args) -> int:
    pair = _pair_arg(args)
    word = _word_arg(args.word)
    if args.kind == "path":
        document = render_path(word, pair, format=args.format)
    elif args.kind == "diagram":
        ranks = parse_ranks(args.ranks) if args.ranks else strict_cover(canonical_start(word, pair))
        document = render_diagram(build_diagram(word, ranks, pair), format=args.format)
    else:
        start = parse_ranks(args.start) if args.start else None
        if args.algorithm == "weak":
            if start is None:
                start = canonical_start(word, pair)
            result = weak_find_rank(word, start, pair, trace_level="full")
        else:
            result = strong_find_rank(word, pair, start=start, trace_level="full")
        document = render_trace(result.trace, format=args.format, mode=args.mode)
    _emit(document, args.output)
    return 0


_COMMANDS = {
    "sweep": _cmd_sweep,
    "invert": _cmd_invert,
    "enumerate": _cmd_enumerate,
    "verify": _cmd_verify,
    "area": _cmd_area,
    "render": _cmd_render,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except InvalidInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except InvariantViolation as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
