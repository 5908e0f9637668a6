"""Exception types raised across the package."""


class CodeError(ValueError):
    """Base class for all domain errors."""


class MalformedLine(CodeError):
    def __init__(self, lineno: int, line: str, reason: str):
        self.lineno = lineno
        self.line = line
        self.reason = reason
        super().__init__(f"line {lineno}: {reason}: {line!r}")


class DuplicateCodeword(CodeError):
    pass


class EmptyCode(CodeError):
    """The code has no codewords (or no nonempty codewords where one is needed)."""


class BadParameter(CodeError):
    pass


class DimensionMismatch(CodeError):
    pass


class IndexOutOfRange(CodeError):
    pass


class UnboundedInterval(CodeError):
    pass


class NoEpsilon(CodeError):
    """All finite endpoints coincide, so no nonzero endpoint distance exists."""


class DimensionTooHigh(CodeError):
    pass
