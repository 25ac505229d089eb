"""Exception hierarchy shared by every module.

Precondition failures derive from :class:`PreconditionError` (CLI exit 3),
internal self-check failures from :class:`VerificationError` (CLI exit 4).
"""


class CompositaError(Exception):
    """Base class for all errors raised by this package."""


class PreconditionError(CompositaError, ValueError):
    """An input violates an operation's precondition.

    ``subexpression`` is filled in by the expression evaluator so the
    message can point at the offending part of a user expression.
    """

    subexpression: str | None = None

    def __str__(self) -> str:
        msg = super().__str__()
        if self.subexpression is not None:
            return f"{msg} (in {self.subexpression!r})"
        return msg


class ZeroConstantTerm(PreconditionError):
    pass


class NonzeroConstantTerm(PreconditionError):
    pass


# reversion uses the shorter name for the same condition
NonzeroConstant = NonzeroConstantTerm


class NonzeroInnerConstant(NonzeroConstantTerm):
    pass


class ZeroLinearTerm(PreconditionError):
    pass


class LinearTermNotOne(PreconditionError):
    pass


class ZeroLeadingEntry(PreconditionError):
    pass


class ZeroR0(ZeroLeadingEntry):
    pass


class InvalidParameter(PreconditionError):
    pass


class ShapeMismatch(PreconditionError):
    pass


class RowOutOfRange(PreconditionError, IndexError):
    pass


class InsufficientRows(PreconditionError):
    pass


class VerificationError(CompositaError):
    """A result failed its independent post-check; always a bug."""


class ResidualNonzero(VerificationError):
    pass


class ExprSyntaxError(CompositaError):
    """Raised by the expression parser.

    Carries the byte ``offset`` into the source text and the set of tokens
    that would have been accepted there.
    """

    def __init__(self, message: str, text: str, offset: int, expected=()):
        self.text = text
        self.offset = offset
        self.expected = frozenset(expected)
        self.message = message
        super().__init__(self._render())

    def _render(self) -> str:
        out = f"{self.message} at offset {self.offset}"
        if self.expected:
            out += f"; expected one of: {', '.join(sorted(self.expected))}"
        return out
