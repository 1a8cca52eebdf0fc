"""Token-level diff, merged-difference documents and their text-processing uses."""

from .align import ChapterSpan, TagPattern, chapters_of, propagate_tags
from .combine import AgreementReport, agreement_report, resolve
from .diff import (
    EditScript,
    Hunk,
    HunkKind,
    RegionKind,
    ThreeWayRegion,
    diff,
    diff3,
    lcs_length,
)
from .errors import (
    AmbiguousPlaceholder,
    GranularityMismatch,
    MalformedFormat,
    MarkerCollision,
    MultipleInterrogatives,
    NlpDiffError,
    NoAnswer,
    NoInterrogative,
    NoPlaceholderDifference,
    NoQuestionMark,
    UnbalancedTags,
)
from .mdiff import (
    Common,
    Difference,
    Mark,
    MergedDocument,
    merge,
    parse,
    reconstruct_first,
    reconstruct_second,
    render,
)
from .qa import QaResult, SimilarityScore, answer, extract_answer, prepare_question, similarity
from .rules import DifferencePair, Direction, Rule, RuleSet, aggregate, apply_rules, extract_pairs
from .text import Granularity, TokenSeq, detokenize, tokenize_lines, tokenize_words

__version__ = "0.1.0"
