"""Combining the outputs of several analyzers through a worker-marked merge."""

from __future__ import annotations

from dataclasses import dataclass

from .diff import RegionKind, ThreeWayRegion, diff3
from .mdiff import Common, MergedDocument
from .text import TokenSeq


def resolve(doc: MergedDocument) -> TokenSeq:
    """Keep the upper side of unmarked differences and the lower side of x-marked ones.

    The upper side is used verbatim, so a worker's handwritten correction
    there is what ends up in the output.
    """
    tokens: list[str] = []
    for seg in doc.segments:
        if isinstance(seg, Common):
            tokens.extend(seg.tokens)
        elif seg.marked:
            tokens.extend(seg.lower)
        else:
            tokens.extend(seg.upper)
    return TokenSeq(tuple(tokens), doc.granularity)


@dataclass(frozen=True)
class AgreementReport:
    agree_regions: int
    disagree_regions: int
    agree_tokens: int
    disagree_tokens: tuple[int, int, int]
    regions: tuple[ThreeWayRegion, ...]

    @property
    def unanimous(self) -> bool:
        return self.disagree_regions == 0


def agreement_report(a: TokenSeq, b: TokenSeq, c: TokenSeq) -> AgreementReport:
    regions = tuple(diff3(a, b, c))
    agree = [r for r in regions if r.kind is RegionKind.AGREE]
    disagree = [r for r in regions if r.kind is RegionKind.DISAGREE]
    return AgreementReport(
        agree_regions=len(agree),
        disagree_regions=len(disagree),
        agree_tokens=sum(len(r.a) for r in agree),
        disagree_tokens=(
            sum(len(r.a) for r in disagree),
            sum(len(r.b) for r in disagree),
            sum(len(r.c) for r in disagree),
        ),
        regions=regions,
    )
