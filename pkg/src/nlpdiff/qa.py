"""Question answering by best-matching a placeholder question against knowledge sentences.

The interrogative word of the question is replaced by a placeholder,
each knowledge sentence is merged with the question, and the tokens paired
with the placeholder in the merged document are the answer.  Rewrite rules
are applied greedily beforehand to make the two sentences more alike.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    AmbiguousPlaceholder,
    MultipleInterrogatives,
    NoAnswer,
    NoInterrogative,
    NoPlaceholderDifference,
    NoQuestionMark,
    QuestionError,
)
from .mdiff import Common, Difference, MergedDocument, merge
from .rules import Rule, RuleSet, apply_rules
from .text import Granularity, TokenSeq, check_granularity, tokenize_words

PLACEHOLDER = "X"
DEFAULT_INTERROGATIVES = ("where", "who", "what", "when", "which", "whom", "whose")
DEFAULT_MAX_STEPS = 5


@dataclass(frozen=True)
class PreparedQuestion:
    tokens: TokenSeq
    original: str
    placeholder: str = PLACEHOLDER


def prepare_question(
    q: str,
    interrogatives: Iterable[str] = DEFAULT_INTERROGATIVES,
    placeholder: str = PLACEHOLDER,
) -> PreparedQuestion:
    """Replace the interrogative with the placeholder and the final ``?`` with ``.``.

    >>> list(prepare_question("Where is the capital of Japan?").tokens)
    ['X', 'is', 'the', 'capital', 'of', 'Japan.']
    """
    text = q.rstrip()
    if not text.endswith("?"):
        raise NoQuestionMark(f"question does not end with '?': {q!r}")
    words = list(tokenize_words(text[:-1]))
    wanted = {w.lower() for w in interrogatives}
    hits = [i for i, w in enumerate(words) if w.lower() in wanted]
    if not hits:
        raise NoInterrogative(f"no interrogative word in {q!r}")
    if len(hits) > 1:
        raise MultipleInterrogatives(f"several interrogative words in {q!r}")
    if placeholder in words:
        raise QuestionError(f"question already contains the placeholder {placeholder!r}")
    words[hits[0]] = placeholder
    if hits[0] == len(words) - 1:
        # keep the placeholder a token of its own
        words.append(".")
    else:
        words[-1] += "."
    return PreparedQuestion(TokenSeq(tuple(words), Granularity.WORD), q, placeholder)


@dataclass(frozen=True)
class SimilarityScore:
    common_chars: int
    total_chars: int

    @property
    def value(self) -> float:
        return float(self.ratio)

    @property
    def ratio(self) -> Fraction:
        if self.total_chars == 0:
            return Fraction(1)
        return Fraction(self.common_chars, self.total_chars)

    def __str__(self) -> str:
        return f"{self.common_chars}/{self.total_chars} = {self.value:.6f}"


def score_document(doc: MergedDocument) -> SimilarityScore:
    """Characters in common segments over characters in all segments (common counted once)."""
    common = diff_chars = 0
    for seg in doc.segments:
        if isinstance(seg, Common):
            common += sum(map(len, seg.tokens))
        else:
            diff_chars += sum(map(len, seg.upper)) + sum(map(len, seg.lower))
    return SimilarityScore(common, common + diff_chars)


def similarity(a: TokenSeq, b: TokenSeq) -> SimilarityScore:
    check_granularity(a, b)
    return score_document(merge(a, b))


def extract_answer(doc: MergedDocument, placeholder: str = PLACEHOLDER) -> tuple[str, ...]:
    hits = [s for s in doc.segments if isinstance(s, Difference) and s.upper == (placeholder,)]
    if not hits:
        raise NoPlaceholderDifference(f"no difference has exactly {placeholder!r} as its upper side")
    if len(hits) > 1:
        raise AmbiguousPlaceholder(f"{len(hits)} differences pair with {placeholder!r}")
    return hits[0].lower


@dataclass(frozen=True)
class QaResult:
    answer: tuple[str, ...]
    knowledge_sentence: str
    score: SimilarityScore
    initial_score: SimilarityScore
    applied_rules: tuple[str, ...]
    merged: MergedDocument
    question: TokenSeq
    knowledge: TokenSeq

    @property
    def answer_text(self) -> str:
        return " ".join(self.answer)


@dataclass(frozen=True)
class _Match:
    question: TokenSeq
    knowledge: TokenSeq
    doc: MergedDocument
    score: SimilarityScore
    initial: SimilarityScore
    applied: tuple[str, ...]


def _climb(
    question: TokenSeq, knowledge: TokenSeq, rules: Sequence[Rule], max_steps: int, placeholder: str
) -> _Match:
    doc = merge(question, knowledge)
    score = initial = score_document(doc)
    applied: list[str] = []
    for _ in range(max_steps):
        best = None
        candidates = [("question", c, r) for c, r in apply_rules(question, rules)]
        candidates += [("knowledge", c, r) for c, r in apply_rules(knowledge, rules)]
        for side, cand, rule in candidates:
            if side == "question":
                if cand.tokens.count(placeholder) != 1:
                    continue
                cand_doc = merge(cand, knowledge)
            else:
                cand_doc = merge(question, cand)
            cand_score = score_document(cand_doc)
            # strict improvement; the first candidate wins ties
            if cand_score.ratio > (best[3].ratio if best else score.ratio):
                best = (side, cand, cand_doc, cand_score, rule)
        if best is None:
            break
        side, cand, doc, score, rule = best
        if side == "question":
            question = cand
        else:
            knowledge = cand
        applied.append(f"{rule} [{side}]")
    return _Match(question, knowledge, doc, score, initial, tuple(applied))


def answer(
    q: str,
    kb: Sequence[str],
    rs: RuleSet | Iterable[Rule] = (),
    max_steps: int = DEFAULT_MAX_STEPS,
    interrogatives: Iterable[str] = DEFAULT_INTERROGATIVES,
    placeholder: str = PLACEHOLDER,
) -> QaResult:
    """Answer ``q`` from the knowledge sentence that best matches it.

    Each sentence is hill-climbed on its own; the highest final similarity
    whose merge yields a clean placeholder difference wins, the earliest
    sentence on ties.
    """
    if not kb:
        raise ValueError("knowledge base is empty")
    if max_steps < 0:
        raise ValueError("max_steps must be non-negative")
    prepared = prepare_question(q, interrogatives, placeholder)
    rules = [r for r in rs if not r.is_insertion]

    best: QaResult | None = None
    for sentence in kb:
        m = _climb(prepared.tokens, tokenize_words(sentence), rules, max_steps, placeholder)
        try:
            ans = extract_answer(m.doc, placeholder)
        except (NoPlaceholderDifference, AmbiguousPlaceholder):
            continue
        if best is None or m.score.ratio > best.score.ratio:
            best = QaResult(
                answer=ans,
                knowledge_sentence=sentence,
                score=m.score,
                initial_score=m.initial,
                applied_rules=m.applied,
                merged=m.doc,
                question=m.question,
                knowledge=m.knowledge,
            )
    if best is None:
        raise NoAnswer(f"no knowledge sentence pairs an answer with {placeholder!r}")
    return best
