"""Exception types shared across the package."""


class DomainError(Exception):
    """An operand lies outside an operation's domain."""


class InfiniteElement(DomainError):
    """A finite element was required."""


class UnboundedOperand(DomainError):
    """A bounded sequence was required."""


class NotLittleOh(DomainError):
    """A little-oh polynomial was required."""


class DomainViolation(DomainError):
    """A sample falls outside the precondition of the map under test."""


class InconclusiveSample(Exception):
    """Numeric sampling could not certify a verdict."""


class ParseError(Exception):
    """Syntax error, with the byte offset of the offending lexeme."""

    def __init__(self, position: int, expected: str, found: str):
        self.position = position
        self.expected = expected
        self.found = found
        super().__init__(f"at offset {position}: expected {expected}, found {found!r}")


class DivisionNotSupported(ParseError):
    """Division is only defined by nonzero rationals and monomials in n."""

    def __init__(self, position: int, found: str):
        ParseError.__init__(self, position, "a rational or monomial divisor", found)


class ZeroDivisor(ParseError):
    """Division by the rational zero."""

    def __init__(self, position: int):
        ParseError.__init__(self, position, "a nonzero divisor", "0")
