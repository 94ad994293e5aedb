"""Exception hierarchy shared by the arithmetic, DSL and verification layers."""


class CongruenceError(Exception):
    """Base class for every error raised by this package."""


class NotInvertible(CongruenceError, ArithmeticError):
    """Division by a residue that shares a factor with the modulus."""


class NotPIntegral(NotInvertible):
    """A rational whose reduced denominator is divisible by p."""


class ModulusMismatch(CongruenceError, TypeError):
    """Binary operation on residues with different moduli."""


class IndexOutOfRange(CongruenceError, ValueError):
    pass


class NonIntegerIndex(CongruenceError, ValueError):
    """An index expression did not evaluate to an exact integer."""


class UnboundVariable(CongruenceError, NameError):
    pass


class ConsistencyError(CongruenceError, AssertionError):
    """Two independent computations of the same quantity disagree."""


class ParseError(CongruenceError, ValueError):
    """Malformed congruence text.

    Carries the 1-based ``line`` and ``column`` of the offending token and the
    set of token kinds the parser would have accepted there.
    """

    def __init__(self, message, line=1, column=1, expected=()):
        self.message = message
        self.line = line
        self.column = column
        self.expected = tuple(sorted(set(expected)))
        text = f"{line}:{column}: {message}"
        if self.expected:
            text += f" (expected one of: {', '.join(self.expected)})"
        super().__init__(text)
