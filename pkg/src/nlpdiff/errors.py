"""Exception hierarchy shared by every nlpdiff module."""

from __future__ import annotations


class NlpDiffError(Exception):
    """Base class for all errors raised by this package."""


class LocatedError(NlpDiffError):
    """An error tied to a (1-based) line of some input text."""

    def __init__(self, message: str, line: int | None = None, source: str | None = None):
        super().__init__(message)
        self.message = message
        self.line = line
        self.source = source

    def __str__(self) -> str:
        prefix = ""
        if self.source is not None:
            prefix = f"{self.source}:"
        if self.line is not None:
            prefix += f"{self.line}:"
        return f"{prefix} {self.message}" if prefix else self.message


class MarkerCollision(LocatedError):
    """A token equals one of the reserved mdiff marker lines."""


class MalformedFormat(LocatedError):
    """An mdiff document does not follow the begin/separator/end grammar."""


class GranularityMismatch(NlpDiffError, ValueError):
    pass


class UnbalancedTags(NlpDiffError, ValueError):
    pass


class QuestionError(NlpDiffError, ValueError):
    """The question cannot be turned into a placeholder sentence."""


class NoInterrogative(QuestionError):
    pass


class MultipleInterrogatives(QuestionError):
    pass


class NoQuestionMark(QuestionError):
    pass


class NoPlaceholderDifference(NlpDiffError):
    pass


class AmbiguousPlaceholder(NlpDiffError):
    pass


class NoAnswer(NlpDiffError):
    pass
