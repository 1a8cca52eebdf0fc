"""Rewrite rules harvested from the differences of parallel texts."""

from __future__ import annotations

import enum
import io
from collections import Counter
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field

from .mdiff import Common, Difference, MergedDocument
from .text import TokenSeq

DEFAULT_CONTEXT = 2


class Direction(enum.Enum):
    FIRST_TO_SECOND = "first-to-second"
    SECOND_TO_FIRST = "second-to-first"


@dataclass(frozen=True)
class DifferencePair:
    source: tuple[str, ...]
    target: tuple[str, ...]
    left_context: tuple[str, ...] = ()
    right_context: tuple[str, ...] = ()


@dataclass(frozen=True, order=True)
class Rule:
    source: tuple[str, ...]
    target: tuple[str, ...]

    @property
    def is_insertion(self) -> bool:
        return not self.source

    def reversed(self) -> Rule:
        return Rule(self.target, self.source)

    def __str__(self) -> str:
        return f"{' '.join(self.source) or '()'} -> {' '.join(self.target) or '()'}"


@dataclass(frozen=True)
class RuleSet:
    """Rule occurrence counts.  Iteration order is first-seen order."""

    counts: dict[Rule, int] = field(default_factory=dict)
    direction: Direction = Direction.FIRST_TO_SECOND

    def __len__(self) -> int:
        return len(self.counts)

    def __iter__(self) -> Iterator[Rule]:
        return iter(self.counts)

    def __contains__(self, rule: object) -> bool:
        return rule in self.counts

    def count(self, source: Iterable[str], target: Iterable[str]) -> int:
        return self.counts.get(Rule(tuple(source), tuple(target)), 0)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def reversed(self) -> RuleSet:
        flipped = {
            Direction.FIRST_TO_SECOND: Direction.SECOND_TO_FIRST,
            Direction.SECOND_TO_FIRST: Direction.FIRST_TO_SECOND,
        }[self.direction]
        return RuleSet({r.reversed(): n for r, n in self.counts.items()}, flipped)

    @classmethod
    def from_rules(cls, rules: Iterable[tuple[Iterable[str], Iterable[str]]]) -> RuleSet:
        """Build a set with count 1 per listed ``(source, target)`` pair."""
        counts: Counter[Rule] = Counter(Rule(tuple(s), tuple(t)) for s, t in rules)
        return cls(dict(counts))


def extract_pairs(doc: MergedDocument, k: int = DEFAULT_CONTEXT) -> list[DifferencePair]:
    """One pair per difference, with up to ``k`` tokens of neighbouring common context."""
    if k < 0:
        raise ValueError("context width must be non-negative")
    segs = doc.segments
    pairs = []
    for i, seg in enumerate(segs):
        if not isinstance(seg, Difference):
            continue
        left: tuple[str, ...] = ()
        right: tuple[str, ...] = ()
        if k and i > 0 and isinstance(segs[i - 1], Common):
            left = segs[i - 1].tokens[-k:]
        if k and i + 1 < len(segs) and isinstance(segs[i + 1], Common):
            right = segs[i + 1].tokens[:k]
        pairs.append(DifferencePair(seg.upper, seg.lower, left, right))
    return pairs


def aggregate(
    pairs: Iterable[DifferencePair], direction: Direction = Direction.FIRST_TO_SECOND
) -> RuleSet:
    counts: Counter[Rule] = Counter()
    for p in pairs:
        if direction is Direction.FIRST_TO_SECOND:
            counts[Rule(p.source, p.target)] += 1
        else:
            counts[Rule(p.target, p.source)] += 1
    return RuleSet(dict(counts), direction)


def apply_rules(
    seq: TokenSeq, rs: RuleSet | Iterable[Rule], position: int | None = None
) -> list[tuple[TokenSeq, Rule]]:
    """Every single-rule rewrite of ``seq``.

    Each candidate replaces one occurrence of a rule's source span with its
    target.  Insertion rules (empty source) are never applied.  With
    ``position`` only occurrences starting there are considered.
    """
    tokens = seq.tokens
    if position is None:
        starts: Iterable[int] = range(len(tokens))
    elif 0 <= position < len(tokens):
        starts = (position,)
    else:
        return []
    rules = [r for r in rs if not r.is_insertion]
    out = []
    for i in starts:
        for rule in rules:
            n = len(rule.source)
            if tokens[i : i + n] == rule.source:
                out.append((seq.replace(tokens[:i] + rule.target + tokens[i + n :]), rule))
    return out


# --- TSV persistence -------------------------------------------------------
#
# One rule per line: source tokens, TAB, target tokens, TAB, count.  Tokens
# in a field are space-separated; backslash, tab, space and newline inside a
# token are written as \\, \t, \s, \n, \r, and an empty token as \e.  Lines
# starting with '#' are comments; "# direction: ..." records the direction.

_ESCAPES = {"\\": "\\\\", "\t": "\\t", " ": "\\s", "\n": "\\n", "\r": "\\r"}
_UNESCAPES = {"\\": "\\", "t": "\t", "s": " ", "n": "\n", "r": "\r"}


def _escape(token: str) -> str:
    if not token:
        return "\\e"
    return "".join(_ESCAPES.get(ch, ch) for ch in token)


def _unescape(token: str) -> str:
    if token == "\\e":
        return ""
    out = []
    chars = iter(token)
    for ch in chars:
        if ch == "\\":
            nxt = next(chars, "")
            if nxt not in _UNESCAPES:
                raise ValueError(f"bad escape sequence \\{nxt} in {token!r}")
            out.append(_UNESCAPES[nxt])
        else:
            out.append(ch)
    return "".join(out)


def _field(tokens: tuple[str, ...]) -> str:
    return " ".join(_escape(t) for t in tokens)


def dumps(rs: RuleSet) -> str:
    buf = io.StringIO()
    buf.write(f"# direction: {rs.direction.value}\n")
    for rule, n in rs.counts.items():
        buf.write(f"{_field(rule.source)}\t{_field(rule.target)}\t{n}\n")
    return buf.getvalue()


def loads(text: str) -> RuleSet:
    counts: Counter[Rule] = Counter()
    direction = Direction.FIRST_TO_SECOND
    for lineno, line in enumerate(text.split("\n"), start=1):
        if not line.strip():
            continue
        if line.startswith("#"):
            key, _, value = line[1:].partition(":")
            if key.strip() == "direction":
                direction = Direction(value.strip())
            continue
        parts = line.rstrip("\r").split("\t")
        if len(parts) not in (2, 3):
            raise ValueError(f"line {lineno}: expected 2 or 3 tab-separated fields")
        src, tgt = (tuple(_unescape(t) for t in f.split(" ") if t) for f in parts[:2])
        n = int(parts[2]) if len(parts) == 3 else 1
        if n < 1:
            raise ValueError(f"line {lineno}: count must be positive")
        if not src and not tgt:
            raise ValueError(f"line {lineno}: rule has neither source nor target")
        counts[Rule(src, tgt)] += n
    return RuleSet(dict(counts), direction)
