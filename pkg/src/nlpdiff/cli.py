"""``nlpdiff`` command line: every workflow as a subcommand over files and stdin.

Exit status: 0 success, 1 differences found (``diff``, ``mdiff``, ``diff3``)
or no answer (``qa``), 2 usage, I/O or format error.
"""

from __future__ import annotations

import argparse
import contextlib
import io
import sys
import warnings
from collections.abc import Sequence
from dataclasses import dataclass
from typing import BinaryIO

from . import rules as rules_mod
from .align import TagPattern, propagate_tags
from .combine import agreement_report, resolve
from .diff import HunkKind, RegionKind, diff
from .errors import LocatedError, NlpDiffError, NoAnswer
from .mdiff import merge, parse, reconstruct_first, reconstruct_second, render
from .qa import DEFAULT_INTERROGATIVES, DEFAULT_MAX_STEPS, answer
from .text import Granularity, TokenSeq, split_lines, to_file_text, tokenize

EXIT_OK = 0
EXIT_DIFFERENT = 1
EXIT_ERROR = 2


class _Io:
    def __init__(self, stdin: BinaryIO | None):
        self.stdin = stdin
        self.stdin_used = False

    def read(self, path: str) -> str:
        if path == "-":
            if self.stdin_used:
                raise _UsageError("standard input can only be read once")
            self.stdin_used = True
            stream = self.stdin if self.stdin is not None else sys.stdin.buffer
            data = stream.read()
        else:
            with open(path, "rb") as fh:
                data = fh.read()
        try:
            return data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise _InputError(f"{path}: not valid UTF-8 ({exc.reason} at byte {exc.start})") from exc


class _UsageError(Exception):
    pass


class _InputError(Exception):
    pass


def _granularity(args: argparse.Namespace) -> Granularity:
    return Granularity.WORD if getattr(args, "words", False) else Granularity.LINE


def _load_tokens(rd: _Io, path: str, granularity: Granularity) -> TokenSeq:
    try:
        return tokenize(rd.read(path), granularity)
    except LocatedError as exc:
        exc.source = path
        raise


def _load_doc(rd: _Io, path: str):
    try:
        return parse(rd.read(path))
    except LocatedError as exc:
        exc.source = path
        raise


def cmd_tokenize(args, rd, out) -> int:
    out.write(to_file_text(_load_tokens(rd, args.file, _granularity(args))))
    return EXIT_OK


def cmd_diff(args, rd, out) -> int:
    g = _granularity(args)
    a = _load_tokens(rd, args.first, g)
    b = _load_tokens(rd, args.second, g)
    script = diff(a, b)
    for hunk in script.hunks:
        if hunk.kind is HunkKind.DELETE:
            out.writelines(f"< {t}\n" for t in hunk.tokens)
        elif hunk.kind is HunkKind.INSERT:
            out.writelines(f"> {t}\n" for t in hunk.tokens)
    return EXIT_OK if script.distance == 0 else EXIT_DIFFERENT


def cmd_mdiff(args, rd, out) -> int:
    g = _granularity(args)
    doc = merge(_load_tokens(rd, args.first, g), _load_tokens(rd, args.second, g))
    out.write(render(doc))
    return EXIT_DIFFERENT if doc.differences else EXIT_OK


def cmd_reconstruct(args, rd, out) -> int:
    doc = _load_doc(rd, args.file)
    seq = reconstruct_second(doc) if args.second else reconstruct_first(doc)
    out.write(to_file_text(seq))
    return EXIT_OK


def cmd_resolve(args, rd, out) -> int:
    out.write(to_file_text(resolve(_load_doc(rd, args.file))))
    return EXIT_OK


def cmd_diff3(args, rd, out) -> int:
    g = _granularity(args)
    seqs = [_load_tokens(rd, p, g) for p in (args.first, args.second, args.third)]
    report = agreement_report(*seqs)
    if args.summary:
        out.write(f"agree regions: {report.agree_regions}\n")
        out.write(f"disagree regions: {report.disagree_regions}\n")
        out.write(f"agree tokens: {report.agree_tokens}\n")
        out.write("disagree tokens: {} {} {}\n".format(*report.disagree_tokens))
    else:
        for region in report.regions:
            if region.kind is RegionKind.AGREE:
                continue
            out.write("====\n")
            for label, toks in zip("123", (region.a, region.b, region.c)):
                out.write(f"{label}:\n")
                out.writelines(f"  {t}\n" for t in toks)
    return EXIT_OK if report.unanimous else EXIT_DIFFERENT


def cmd_extract_rules(args, rd, out) -> int:
    pairs = []
    for path in args.files:
        pairs.extend(rules_mod.extract_pairs(_load_doc(rd, path), args.context))
    direction = (
        rules_mod.Direction.SECOND_TO_FIRST if args.reverse else rules_mod.Direction.FIRST_TO_SECOND
    )
    out.write(rules_mod.dumps(rules_mod.aggregate(pairs, direction)))
    return EXIT_OK


def cmd_align(args, rd, out) -> int:
    g = _granularity(args)
    tagged = _load_tokens(rd, args.tagged, g)
    untagged = _load_tokens(rd, args.untagged, g)
    pattern = TagPattern(args.tag_open, args.tag_close)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        result = propagate_tags(tagged, untagged, pattern)
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    out.write(to_file_text(result))
    return EXIT_OK


def cmd_qa(args, rd, out) -> int:
    kb = [line for line in split_lines(rd.read(args.kb)) if line.strip()]
    rs = rules_mod.loads(rd.read(args.rules)) if args.rules else rules_mod.RuleSet()
    interrogatives = args.interrogative or DEFAULT_INTERROGATIVES
    try:
        result = answer(args.question, kb, rs, args.max_steps, interrogatives)
    except NoAnswer as exc:
        print(f"nlpdiff: {exc}", file=sys.stderr)
        return EXIT_DIFFERENT
    out.write(result.answer_text + "\n")
    out.write(f"score: {result.score}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nlpdiff", description="Token-level diff tools for text processing.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def words_flag(p: argparse.ArgumentParser) -> None:
        p.add_argument("--words", action="store_true", help="split into whitespace-separated words first")

    p = sub.add_parser("tokenize", help="print one token per line")
    words_flag(p)
    p.add_argument("file")
    p.set_defaults(func=cmd_tokenize)

    p = sub.add_parser("diff", help="print '<'/'>' lines for differing tokens")
    words_flag(p)
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=cmd_diff)

    p = sub.add_parser("mdiff", help="print the merged-difference document")
    words_flag(p)
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=cmd_mdiff)

    p = sub.add_parser("reconstruct", help="recover one input from an mdiff document")
    side = p.add_mutually_exclusive_group(required=True)
    side.add_argument("--first", action="store_true")
    side.add_argument("--second", action="store_true")
    p.add_argument("file")
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("resolve", help="apply worker x-marks to an mdiff document")
    p.add_argument("file")
    p.set_defaults(func=cmd_resolve)

    p = sub.add_parser("diff3", help="compare three files, pivoting on the first")
    words_flag(p)
    p.add_argument("--summary", action="store_true", help="print region and token counts only")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("third")
    p.set_defaults(func=cmd_diff3)

    p = sub.add_parser("extract-rules", help="aggregate rewrite rules from mdiff documents as TSV")
    p.add_argument("--context", type=int, default=rules_mod.DEFAULT_CONTEXT)
    p.add_argument("--reverse", action="store_true", help="rules rewrite the second side into the first")
    p.add_argument("files", nargs="+")
    p.set_defaults(func=cmd_extract_rules)

    p = sub.add_parser("align", help="carry tags from a tagged file into an untagged one")
    words_flag(p)
    p.add_argument("--tag-open", default="<")
    p.add_argument("--tag-close", default=">")
    p.add_argument("tagged")
    p.add_argument("untagged")
    p.set_defaults(func=cmd_align)

    p = sub.add_parser("qa", help="answer a question from a knowledge file")
    p.add_argument("--kb", required=True, help="one knowledge sentence per line")
    p.add_argument("--rules", help="TSV rule file from extract-rules")
    p.add_argument("--max-steps", type=int, default=DEFAULT_MAX_STEPS)
    p.add_argument("--interrogative", action="append", help="interrogative word (repeatable)")
    p.add_argument("question")
    p.set_defaults(func=cmd_qa)
    return parser


def main(argv: Sequence[str] | None = None, stdin: BinaryIO | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_ERROR
    if getattr(args, "context", 0) < 0:
        parser.print_usage(sys.stderr)
        print("nlpdiff: --context must be non-negative", file=sys.stderr)
        return EXIT_ERROR
    if getattr(args, "max_steps", 0) < 0:
        print("nlpdiff: --max-steps must be non-negative", file=sys.stderr)
        return EXIT_ERROR

    # buffer so that a failure never leaves a partial document on stdout
    out = io.StringIO()
    try:
        status = args.func(args, _Io(stdin), out)
    except _UsageError as exc:
        print(f"nlpdiff: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (OSError, _InputError, NlpDiffError, ValueError) as exc:
        print(f"nlpdiff: {exc}", file=sys.stderr)
        return EXIT_ERROR
    sys.stdout.write(out.getvalue())
    sys.stdout.flush()
    return status


@dataclass(frozen=True)
class RunResult:
    stdout: str
    stderr: str
    status: int


def run(argv: Sequence[str], stdin: bytes = b"") -> RunResult:
    """Run the CLI in-process, capturing both output streams."""
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        status = main(list(argv), io.BytesIO(stdin))
    return RunResult(out.getvalue(), err.getvalue(), status)


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
