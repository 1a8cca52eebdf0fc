"""Carrying structural tags from a tagged text into an untagged parallel text."""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .errors import UnbalancedTags
from .mdiff import Common, merge
from .text import TokenSeq


@dataclass(frozen=True)
class TagPattern:
    """Tokens of the form ``<open>name<close>``; a leading ``/`` marks a closing tag."""

    open: str = "<"
    close: str = ">"

    def __post_init__(self) -> None:
        if not self.open or not self.close:
            raise ValueError("tag affixes must be non-empty")

    def matches(self, token: str) -> bool:
        return (
            len(token) > len(self.open) + len(self.close)
            and token.startswith(self.open)
            and token.endswith(self.close)
        )

    def name(self, token: str) -> str:
        inner = token[len(self.open) : len(token) - len(self.close)]
        return inner[1:] if inner.startswith("/") else inner

    def is_closing(self, token: str) -> bool:
        return self.matches(token) and token[len(self.open)] == "/"


DEFAULT_PATTERN = TagPattern()


def propagate_tags(
    tagged: TokenSeq, untagged: TokenSeq, pattern: TagPattern = DEFAULT_PATTERN
) -> TokenSeq:
    """Merge ``tagged`` with ``untagged``, then drop everything that only the tagged side has except the tags.

    Inside a difference the surviving tags come before the untagged side's
    tokens.
    """
    if any(pattern.matches(t) for t in untagged):
        warnings.warn("untagged input already contains tag-like tokens", stacklevel=2)
    out: list[str] = []
    for seg in merge(tagged, untagged).segments:
        if isinstance(seg, Common):
            out.extend(seg.tokens)
        else:
            out.extend(t for t in seg.upper if pattern.matches(t))
            out.extend(seg.lower)
    return untagged.replace(out)


@dataclass(frozen=True)
class ChapterSpan:
    tag: str | None
    start: int
    end: int
    tokens: tuple[str, ...]


def chapters_of(annotated: TokenSeq, pattern: TagPattern = DEFAULT_PATTERN) -> list[ChapterSpan]:
    """Split the non-tag tokens into spans labelled by their innermost open tag.

    Every open tag yields a span, possibly empty.  Untagged runs before the
    first tag or after a closing tag yield a span only when non-empty,
    except that a tag-free input yields exactly one span.  ``start``/``end``
    index into ``annotated``.
    """
    spans: list[ChapterSpan] = []
    stack: list[str] = []
    cur_tag: str | None = None
    cur_start = 0
    cur: list[str] = []
    forced = False  # span opened by a tag is reported even when empty
    seen_tag = False

    def close_span(end: int) -> None:
        if cur or forced:
            spans.append(ChapterSpan(cur_tag, cur_start, end, tuple(cur)))

    for i, tok in enumerate(annotated):
        if not pattern.matches(tok):
            if not cur:
                cur_start = i
            cur.append(tok)
            continue
        close_span(i)
        seen_tag = True
        if pattern.is_closing(tok):
            name = pattern.name(tok)
            for depth in range(len(stack) - 1, -1, -1):
                if pattern.name(stack[depth]) == name:
                    del stack[depth:]
                    break
            else:
                raise UnbalancedTags(f"closing tag {tok!r} at token {i} has no open tag")
            forced = False
        else:
            stack.append(tok)
            forced = True
        cur_tag = stack[-1] if stack else None
        cur = []
        cur_start = i + 1
    close_span(len(annotated))
    if not seen_tag and not spans:
        spans.append(ChapterSpan(None, 0, len(annotated), ()))
    return spans
