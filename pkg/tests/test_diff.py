import itertools
import random

import pytest
from hypothesis import given, settings

from nlpdiff import GranularityMismatch, HunkKind, RegionKind, TokenSeq, diff, diff3, lcs_length
from nlpdiff.text import Granularity, tokenize_lines, tokenize_words

from strategies import seqs, token_lists


def brute_force_lcs(a, b):
    """Longest subsequence of ``a`` that is also a subsequence of ``b``, by enumeration."""

    def is_subseq(sub, seq):
        it = iter(seq)
        return all(tok in it for tok in sub)

    for size in range(len(a), -1, -1):
        for idx in itertools.combinations(range(len(a)), size):
            if is_subseq([a[i] for i in idx], b):
                return size
    return 0


def T(*tokens):
    return TokenSeq(tuple(tokens))


def test_paper_example_script():
    a = tokenize_lines("I\ngo\nto\nschool.\n")
    b = tokenize_lines("I\ngo\nto\nuniversity.\n")
    script = diff(a, b)
    assert [(h.kind, h.tokens) for h in script.hunks] == [
        (HunkKind.KEEP, ("I", "go", "to")),
        (HunkKind.DELETE, ("school.",)),
        (HunkKind.INSERT, ("university.",)),
    ]


def test_identity():
    s = T("a", "b", "c")
    assert [(h.kind, h.tokens) for h in diff(s, s).hunks] == [(HunkKind.KEEP, ("a", "b", "c"))]
    assert diff(T(), T()).hunks == ()


def test_lcs_example():
    a, b = T(*"abcab"), T(*"bca")
    assert lcs_length(a, b) == 3
    assert diff(a, b).keep_count == 3


@pytest.mark.parametrize(
    "a, b, expected",
    [("abcde", "abcde", 5), ("abc", "xyz", 0), ("abcab", "bca", 3), ("", "abc", 0), ("ABCBDAB", "BDCABA", 4)],
)
def test_lcs_length(a, b, expected):
    assert lcs_length(a, b) == expected


def test_lcs_length_matches_enumeration():
    rng = random.Random(7)
    for _ in range(300):
        a = [rng.choice("abc") for _ in range(rng.randint(0, 7))]
        b = [rng.choice("abc") for _ in range(rng.randint(0, 7))]
        assert lcs_length(a, b) == brute_force_lcs(a, b)


def test_granularity_mismatch():
    with pytest.raises(GranularityMismatch):
        diff(tokenize_lines("a"), tokenize_words("a"))
    with pytest.raises(GranularityMismatch):
        diff3(tokenize_lines("a"), tokenize_lines("a"), tokenize_words("a"))


def test_replacement_puts_delete_first():
    kinds = [h.kind for h in diff(T("a", "x", "b"), T("a", "y", "z", "b")).hunks]
    assert kinds == [HunkKind.KEEP, HunkKind.DELETE, HunkKind.INSERT, HunkKind.KEEP]


@settings(max_examples=400)
@given(token_lists("abcd"), token_lists("abcd"))
def test_optimal_and_reconstructing(a, b):
    script = diff(TokenSeq(tuple(a)), TokenSeq(tuple(b)))
    assert script.keep_count == lcs_length(a, b)
    assert script.source() == a
    assert script.target() == b
    assert script.apply(a) == b
    assert (script.len_a, script.len_b) == (len(a), len(b))


@given(token_lists("abcd"), token_lists("abcd"))
def test_hunks_are_maximal_and_canonical(a, b):
    hunks = diff(TokenSeq(tuple(a)), TokenSeq(tuple(b))).hunks
    for h in hunks:
        assert h.tokens
    for h1, h2 in zip(hunks, hunks[1:]):
        assert h1.kind is not h2.kind
        assert not (h1.kind is HunkKind.INSERT and h2.kind is HunkKind.DELETE)


@given(token_lists(), token_lists())
def test_lcs_symmetry(a, b):
    assert lcs_length(a, b) == lcs_length(b, a)


def test_diff_is_deterministic():
    a, b = T(*"abcabba"), T(*"cbabac")
    assert diff(a, b) == diff(a, b)


def test_diff3_identical():
    s = T("a", "b")
    regions = diff3(s, s, s)
    assert [r.kind for r in regions] == [RegionKind.AGREE]
    assert regions[0].a == ("a", "b")


def test_diff3_single_disagreement():
    regions = diff3(T("x"), T("x"), T("y"))
    assert len(regions) == 1
    r = regions[0]
    assert (r.kind, r.a, r.b, r.c) == (RegionKind.DISAGREE, ("x",), ("x",), ("y",))


def test_diff3_middle_change():
    regions = diff3(T("a", "b", "c"), T("a", "B", "c"), T("a", "b", "c"))
    assert [(r.kind, r.a, r.b, r.c) for r in regions] == [
        (RegionKind.AGREE, ("a",), ("a",), ("a",)),
        (RegionKind.DISAGREE, ("b",), ("B",), ("b",)),
        (RegionKind.AGREE, ("c",), ("c",), ("c",)),
    ]


def test_diff3_empty():
    assert diff3(T(), T(), T()) == []


@settings(max_examples=300)
@given(seqs(max_size=8), seqs(max_size=8), seqs(max_size=8))
def test_diff3_slots_reassemble(a, b, c):
    regions = diff3(a, b, c)
    assert [t for r in regions for t in r.a] == list(a)
    assert [t for r in regions for t in r.b] == list(b)
    assert [t for r in regions for t in r.c] == list(c)
    for r in regions:
        if r.kind is RegionKind.AGREE:
            assert r.a == r.b == r.c and r.a
        else:
            assert r.a or r.b or r.c
    for r1, r2 in zip(regions, regions[1:]):
        assert not (r1.kind is r2.kind is RegionKind.AGREE)


def test_word_granularity_is_kept():
    a, b = tokenize_words("a b"), tokenize_words("a c")
    assert diff(a, b).keep_count == 1
    assert a.granularity is Granularity.WORD
