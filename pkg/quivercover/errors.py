"""Exceptions raised by quivercover.

Every error is a ``ValueError`` so callers that only care about "bad input"
can catch the builtin; the CLI maps ``QuiverCoverError`` to exit code 1 and
``UsageError`` to exit code 2.
"""


class QuiverCoverError(ValueError):
    pass


class StructuralError(QuiverCoverError):
    pass


class HypothesisError(QuiverCoverError):
    pass


class PathError(QuiverCoverError):
    pass


class AdmissibilityError(QuiverCoverError):
    pass


class MembershipError(QuiverCoverError):
    pass


class TransvectionGroupError(QuiverCoverError):
    pass


class InvertibilityError(QuiverCoverError):
    pass


class NotConjugateError(QuiverCoverError):
    pass


class PreconditionError(QuiverCoverError):
    pass


class NotComparableError(QuiverCoverError):
    pass


class CapacityError(QuiverCoverError):
    """A configured cap was hit; ``partial`` holds whatever was built so far."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class ConsistencyError(QuiverCoverError):
    """An internal guarantee failed; ``trace`` lists the steps leading to it."""

    def __init__(self, message, trace=()):
        super().__init__(message)
        self.trace = tuple(trace)


class StageError(QuiverCoverError):
    def __init__(self, stage, cause):
        super().__init__(f"[{stage}] {cause}")
        self.stage = stage
        self.cause = cause


class ParseError(QuiverCoverError):
    def __init__(self, message, line=0, column=0):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
        self.reason = message


class UsageError(QuiverCoverError):
    pass
