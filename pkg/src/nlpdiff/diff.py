"""LCS-optimal two-way diff (Myers greedy O(ND)) and a pivoted three-way diff."""

from __future__ import annotations

import enum
from collections.abc import Hashable, Sequence
from dataclasses import dataclass

from .text import TokenSeq, check_granularity


class HunkKind(enum.Enum):
    KEEP = "keep"
    DELETE = "delete"
    INSERT = "insert"


@dataclass(frozen=True)
class Hunk:
    kind: HunkKind
    tokens: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.tokens:
            raise ValueError("a hunk must carry at least one token")


@dataclass(frozen=True)
class EditScript:
    hunks: tuple[Hunk, ...]
    len_a: int
    len_b: int

    @property
    def keep_count(self) -> int:
        return sum(len(h.tokens) for h in self.hunks if h.kind is HunkKind.KEEP)

    @property
    def distance(self) -> int:
        return sum(len(h.tokens) for h in self.hunks if h.kind is not HunkKind.KEEP)

    def source(self) -> list[str]:
        return [t for h in self.hunks if h.kind is not HunkKind.INSERT for t in h.tokens]

    def target(self) -> list[str]:
        return [t for h in self.hunks if h.kind is not HunkKind.DELETE for t in h.tokens]

    def apply(self, a: Sequence[str]) -> list[str]:
        """Transform ``a`` into the second input, checking kept/deleted tokens."""
        out: list[str] = []
        i = 0
        for h in self.hunks:
            if h.kind is HunkKind.INSERT:
                out.extend(h.tokens)
                continue
            n = len(h.tokens)
            if list(a[i : i + n]) != list(h.tokens):
                raise ValueError(f"script does not match input at position {i}")
            if h.kind is HunkKind.KEEP:
                out.extend(h.tokens)
            i += n
        if i != len(a):
            raise ValueError("script does not consume the whole input")
        return out


def lcs_length(a: Sequence[Hashable], b: Sequence[Hashable]) -> int:
    """Length of a longest common subsequence by the full O(nm) table."""
    prev = [0] * (len(b) + 1)
    for x in a:
        cur = [0]
        for j, y in enumerate(b):
            cur.append(prev[j] + 1 if x == y else max(prev[j + 1], cur[j]))
        prev = cur
    return prev[-1]


def _myers(a: Sequence[int], b: Sequence[int]) -> list[tuple[int, int]]:
    """Matched index pairs of a shortest edit script between ``a`` and ``b``.

    At equal cost the forward scan extends the deletion-side diagonal
    first, which makes the result deterministic.
    """
    n, m = len(a), len(b)
    if n == 0 or m == 0:
        return []
    offset = n + m + 1
    v = [0] * (2 * offset + 1)
    trace: list[list[int]] = []
    found = False
    for d in range(n + m + 1):
        for k in range(-d, d + 1, 2):
            if k == -d or (k != d and v[offset + k - 1] < v[offset + k + 1]):
                x = v[offset + k + 1]
            else:
                x = v[offset + k - 1] + 1
            y = x - k
            while x < n and y < m and a[x] == b[y]:
                x += 1
                y += 1
            v[offset + k] = x
            if x >= n and y >= m:
                found = True
                break
        trace.append(v[offset - d : offset + d + 1])
        if found:
            break

    matches: list[tuple[int, int]] = []
    x, y = n, m
    for d in range(len(trace) - 1, -1, -1):
        k = x - y
        if d == 0:
            while x > 0 and y > 0:
                x -= 1
                y -= 1
                matches.append((x, y))
            break
        prev = trace[d - 1]

        def at(kk: int) -> int:
            return prev[kk + (d - 1)]

        if k == -d or (k != d and at(k - 1) < at(k + 1)):
            prev_k = k + 1
        else:
            prev_k = k - 1
        prev_x = at(prev_k)
        prev_y = prev_x - prev_k
        while x > prev_x and y > prev_y:
            x -= 1
            y -= 1
            matches.append((x, y))
        x, y = prev_x, prev_y
    matches.reverse()
    return matches


def match_indices(a: Sequence[Hashable], b: Sequence[Hashable]) -> list[tuple[int, int]]:
    """Index pairs ``(i, j)`` with ``a[i] == b[j]`` forming a longest common subsequence."""
    ids: dict[Hashable, int] = {}
    ia = [ids.setdefault(t, len(ids)) for t in a]
    ib = [ids.setdefault(t, len(ids)) for t in b]

    # common prefix and suffix
    lo = 0
    while lo < len(ia) and lo < len(ib) and ia[lo] == ib[lo]:
        lo += 1
    hi_a, hi_b = len(ia), len(ib)
    while hi_a > lo and hi_b > lo and ia[hi_a - 1] == ib[hi_b - 1]:
        hi_a -= 1
        hi_b -= 1

    # tokens occurring in only one input can never be matched; dropping them
    # keeps the result optimal and shrinks D for typical edits
    in_a = set(ia[lo:hi_a])
    in_b = set(ib[lo:hi_b])
    keep_a = [i for i in range(lo, hi_a) if ia[i] in in_b]
    keep_b = [j for j in range(lo, hi_b) if ib[j] in in_a]
    core = _myers([ia[i] for i in keep_a], [ib[j] for j in keep_b])

    matches = [(i, i) for i in range(lo)]
    matches.extend((keep_a[i], keep_b[j]) for i, j in core)
    matches.extend((hi_a + t, hi_b + t) for t in range(len(ia) - hi_a))
    return matches


def _script_from_matches(
    a: Sequence[str], b: Sequence[str], matches: list[tuple[int, int]]
) -> EditScript:
    hunks: list[Hunk] = []
    keep: list[str] = []

    def flush_keep() -> None:
        if keep:
            hunks.append(Hunk(HunkKind.KEEP, tuple(keep)))
            keep.clear()

    i = j = 0
    for mi, mj in [*matches, (len(a), len(b))]:
        if mi > i or mj > j:
            flush_keep()
            if mi > i:
                hunks.append(Hunk(HunkKind.DELETE, tuple(a[i:mi])))
            if mj > j:
                hunks.append(Hunk(HunkKind.INSERT, tuple(b[j:mj])))
        if mi < len(a):
            keep.append(a[mi])
        i, j = mi + 1, mj + 1
    flush_keep()
    return EditScript(tuple(hunks), len(a), len(b))


def diff(a: TokenSeq, b: TokenSeq) -> EditScript:
    """Edit script turning ``a`` into ``b`` whose kept tokens form an LCS.

    Within each changed region the deletions come first, then the insertions.
    """
    check_granularity(a, b)
    return _script_from_matches(a.tokens, b.tokens, match_indices(a.tokens, b.tokens))


class RegionKind(enum.Enum):
    AGREE = "agree"
    DISAGREE = "disagree"


@dataclass(frozen=True)
class ThreeWayRegion:
    kind: RegionKind
    a: tuple[str, ...]
    b: tuple[str, ...]
    c: tuple[str, ...]


def diff3(a: TokenSeq, b: TokenSeq, c: TokenSeq) -> list[ThreeWayRegion]:
    """Three-way regions, using ``a`` as the pivot for both pairwise alignments."""
    check_granularity(a, b, c)
    to_b = dict(match_indices(a.tokens, b.tokens))
    to_c = dict(match_indices(a.tokens, c.tokens))

    regions: list[ThreeWayRegion] = []
    ia = ib = ic = 0
    run: list[str] = []

    def flush_run() -> None:
        if run:
            t = tuple(run)
            regions.append(ThreeWayRegion(RegionKind.AGREE, t, t, t))
            run.clear()

    stable = [(i, to_b[i], to_c[i]) for i in range(len(a)) if i in to_b and i in to_c]
    for i, j, k in [*stable, (len(a), len(b), len(c))]:
        if i > ia or j > ib or k > ic:
            flush_run()
            regions.append(
                ThreeWayRegion(
                    RegionKind.DISAGREE,
                    tuple(a.tokens[ia:i]),
                    tuple(b.tokens[ib:j]),
                    tuple(c.tokens[ic:k]),
                )
            )
        if i < len(a):
            run.append(a.tokens[i])
        ia, ib, ic = i + 1, j + 1, k + 1
    flush_run()
    return regions
