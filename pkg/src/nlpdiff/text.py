"""Tokens, token sequences and conversions to and from raw text.

A token is one compared unit: a whole line in ``LINE`` mode, a
whitespace-delimited word in ``WORD`` mode.  Tokens are plain ``str``.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

from .errors import GranularityMismatch, MarkerCollision

BEGIN_MARKER = ";===== begin ====="
SEPARATOR = ";-----------------"
END_MARKER = ";=====  end  ====="

# The x-marked separator variants would be read back as marks, so they are
# reserved as well.
RESERVED = frozenset({BEGIN_MARKER, SEPARATOR, END_MARKER, "x" + SEPARATOR, "X" + SEPARATOR})


class Granularity(enum.Enum):
    LINE = "line"
    WORD = "word"


@dataclass(frozen=True)
class TokenSeq(Sequence[str]):
    tokens: tuple[str, ...] = ()
    granularity: Granularity = Granularity.LINE

    def __post_init__(self) -> None:
        if not isinstance(self.tokens, tuple):
            object.__setattr__(self, "tokens", tuple(self.tokens))

    def __len__(self) -> int:
        return len(self.tokens)

    def __iter__(self) -> Iterator[str]:
        return iter(self.tokens)

    def __getitem__(self, index):  # type: ignore[override]
        if isinstance(index, slice):
            return TokenSeq(self.tokens[index], self.granularity)
        return self.tokens[index]

    def replace(self, tokens: Iterable[str]) -> TokenSeq:
        """Same granularity, different tokens."""
        return TokenSeq(tuple(tokens), self.granularity)


def check_granularity(*seqs: TokenSeq) -> Granularity:
    kinds = {s.granularity for s in seqs}
    if len(kinds) > 1:
        raise GranularityMismatch(f"inputs mix granularities: {sorted(k.value for k in kinds)}")
    return seqs[0].granularity


def _check_markers(tokens: Sequence[str], lines: Sequence[int] | None = None) -> None:
    for i, tok in enumerate(tokens):
        if tok in RESERVED:
            line = lines[i] if lines is not None else i + 1
            raise MarkerCollision(f"token {tok!r} is a reserved mdiff marker", line=line)


def split_lines(text: str) -> list[str]:
    """Split on LF, dropping one CR per line and the empty tail after a final newline."""
    if not text:
        return []
    parts = text.split("\n")
    if parts[-1] == "":
        parts.pop()
    return [p[:-1] if p.endswith("\r") else p for p in parts]


def tokenize_lines(text: str) -> TokenSeq:
    """One token per line of ``text``.

    >>> list(tokenize_lines("I\\ngo\\nto\\nschool.\\n"))
    ['I', 'go', 'to', 'school.']
    """
    tokens = split_lines(text)
    _check_markers(tokens)
    return TokenSeq(tuple(tokens), Granularity.LINE)


def tokenize_words(text: str) -> TokenSeq:
    """Maximal runs of non-whitespace; punctuation stays attached."""
    tokens = text.split()
    if any(t in RESERVED for t in tokens):
        # recover the line number for the error message
        for lineno, line in enumerate(split_lines(text), start=1):
            words = line.split()
            _check_markers(words, [lineno] * len(words))
    return TokenSeq(tuple(tokens), Granularity.WORD)


def tokenize(text: str, granularity: Granularity = Granularity.LINE) -> TokenSeq:
    if granularity is Granularity.WORD:
        return tokenize_words(text)
    return tokenize_lines(text)


def detokenize(seq: TokenSeq) -> str:
    sep = "\n" if seq.granularity is Granularity.LINE else " "
    return sep.join(seq.tokens)


def to_file_text(seq: TokenSeq) -> str:
    """Render as a file, one token per line, LF-terminated."""
    return "".join(tok + "\n" for tok in seq.tokens)
