"""The merged-difference (``.mdiff``) document: build, render, parse, invert.

A rendered document lists common tokens once, one per line.  Each
difference is bracketed by marker lines::

    ;===== begin =====
    <tokens only in the first input>
    ;-----------------
    <tokens only in the second input>
    ;=====  end  =====

A worker may prefix the separator with ``x`` to say the lower variant is
the correct one.
"""

from __future__ import annotations

import enum
from collections.abc import Iterator
from dataclasses import dataclass

from .diff import HunkKind, diff
from .errors import MalformedFormat
from .text import BEGIN_MARKER, END_MARKER, SEPARATOR, Granularity, TokenSeq, split_lines

MARKED_SEPARATORS = ("x" + SEPARATOR, "X" + SEPARATOR)


class Mark(enum.Enum):
    NONE = "none"
    X = "x"


@dataclass(frozen=True)
class Common:
    tokens: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.tokens:
            raise ValueError("a common segment needs at least one token")


@dataclass(frozen=True)
class Difference:
    upper: tuple[str, ...]
    lower: tuple[str, ...]
    mark: Mark = Mark.NONE

    def __post_init__(self) -> None:
        if not self.upper and not self.lower:
            raise ValueError("a difference needs tokens on at least one side")

    @property
    def marked(self) -> bool:
        return self.mark is Mark.X


Segment = Common | Difference


@dataclass(frozen=True)
class MergedDocument:
    segments: tuple[Segment, ...] = ()
    granularity: Granularity = Granularity.LINE

    def __post_init__(self) -> None:
        object.__setattr__(self, "segments", tuple(self.segments))
        for prev, cur in zip(self.segments, self.segments[1:]):
            if isinstance(prev, Common) and isinstance(cur, Common):
                raise ValueError("adjacent common segments must be merged")

    @property
    def differences(self) -> list[Difference]:
        return [s for s in self.segments if isinstance(s, Difference)]

    @property
    def token_count(self) -> int:
        n = 0
        for seg in self.segments:
            if isinstance(seg, Common):
                n += len(seg.tokens)
            else:
                n += len(seg.upper) + len(seg.lower)
        return n

    def with_marks(self, mark: Mark) -> MergedDocument:
        """Copy with every difference carrying ``mark``."""
        segs = [
            Difference(s.upper, s.lower, mark) if isinstance(s, Difference) else s
            for s in self.segments
        ]
        return MergedDocument(tuple(segs), self.granularity)


def merge(a: TokenSeq, b: TokenSeq) -> MergedDocument:
    script = diff(a, b)
    segments: list[Segment] = []
    pending_delete: tuple[str, ...] | None = None
    for hunk in script.hunks:
        if hunk.kind is HunkKind.KEEP:
            if pending_delete is not None:
                segments.append(Difference(pending_delete, ()))
                pending_delete = None
            segments.append(Common(hunk.tokens))
        elif hunk.kind is HunkKind.DELETE:
            pending_delete = hunk.tokens
        else:
            segments.append(Difference(pending_delete or (), hunk.tokens))
            pending_delete = None
    if pending_delete is not None:
        segments.append(Difference(pending_delete, ()))
    return MergedDocument(tuple(segments), a.granularity)


def _render_lines(doc: MergedDocument) -> Iterator[str]:
    for seg in doc.segments:
        if isinstance(seg, Common):
            yield from seg.tokens
            continue
        yield BEGIN_MARKER
        yield from seg.upper
        yield ("x" + SEPARATOR) if seg.marked else SEPARATOR
        yield from seg.lower
        yield END_MARKER


def render(doc: MergedDocument) -> str:
    return "".join(line + "\n" for line in _render_lines(doc))


class _State(enum.Enum):
    OUTSIDE = 0
    UPPER = 1
    LOWER = 2


def parse(text: str, granularity: Granularity = Granularity.LINE) -> MergedDocument:
    """Read a rendered document back.

    Whatever tokens appear between the markers are taken as-is, so hand
    edits to either side survive.  Raises :class:`MalformedFormat` with the
    offending line number when the markers are unbalanced.
    """
    segments: list[Segment] = []
    common: list[str] = []
    upper: list[str] = []
    lower: list[str] = []
    mark = Mark.NONE
    state = _State.OUTSIDE
    begin_line = 0

    for lineno, line in enumerate(split_lines(text), start=1):
        is_sep = line == SEPARATOR or line in MARKED_SEPARATORS
        if line == BEGIN_MARKER:
            if state is not _State.OUTSIDE:
                raise MalformedFormat(
                    f"nested begin marker (difference opened on line {begin_line})", line=lineno
                )
            if common:
                segments.append(Common(tuple(common)))
                common = []
            state, begin_line = _State.UPPER, lineno
        elif is_sep:
            if state is not _State.UPPER:
                raise MalformedFormat("separator outside the upper part of a difference", line=lineno)
            mark = Mark.X if line in MARKED_SEPARATORS else Mark.NONE
            state = _State.LOWER
        elif line == END_MARKER:
            if state is _State.OUTSIDE:
                raise MalformedFormat("end marker without a matching begin marker", line=lineno)
            if state is _State.UPPER:
                raise MalformedFormat("end marker before the separator", line=lineno)
            if not upper and not lower:
                raise MalformedFormat("difference has no tokens on either side", line=lineno)
            segments.append(Difference(tuple(upper), tuple(lower), mark))
            upper, lower, mark = [], [], Mark.NONE
            state = _State.OUTSIDE
        elif state is _State.OUTSIDE:
            common.append(line)
        elif state is _State.UPPER:
            upper.append(line)
        else:
            lower.append(line)

    if state is not _State.OUTSIDE:
        raise MalformedFormat(f"difference opened on line {begin_line} is never closed", line=begin_line)
    if common:
        segments.append(Common(tuple(common)))
    return MergedDocument(tuple(segments), granularity)


def reconstruct_first(doc: MergedDocument) -> TokenSeq:
    tokens: list[str] = []
    for seg in doc.segments:
        tokens.extend(seg.tokens if isinstance(seg, Common) else seg.upper)
    return TokenSeq(tuple(tokens), doc.granularity)


def reconstruct_second(doc: MergedDocument) -> TokenSeq:
    tokens: list[str] = []
    for seg in doc.segments:
        tokens.extend(seg.tokens if isinstance(seg, Common) else seg.lower)
    return TokenSeq(tuple(tokens), doc.granularity)
