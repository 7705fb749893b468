"""Exception types shared across the package."""


class BraidError(ValueError):
    """Base class for every error raised by twistedbraids."""


class IndexOutOfRange(BraidError):
    pass


class StrandMismatch(BraidError):
    pass


class PatternMismatch(BraidError):
    """A rewrite rule's left-hand side was not found at the requested span."""

    def __init__(self, rule, expected, found, pos, detail: str = ""):
        self.rule = rule
        # expected is a letter sequence, or a short description when no fixed pattern applies
        self.expected = expected if isinstance(expected, str) else tuple(expected)
        self.found = tuple(found)
        self.pos = pos
        shown = self.expected if isinstance(self.expected, str) else list(self.expected)
        msg = f"{rule}: expected {shown} at position {pos}, found {list(self.found)}"
        super().__init__(f"{msg} ({detail})" if detail else msg)


class InvalidParams(BraidError):
    pass


class RTooLarge(InvalidParams):
    pass


class NotApplicable(BraidError):
    """Positivization hypotheses fail for the requested knot."""


class NotAKnot(BraidError):
    pass


class NotDecidedByDean(BraidError):
    pass


class NotUnimodular(BraidError):
    pass


class BudgetExceeded(BraidError):
    """An oracle run exhausted its step budget without a verdict."""
