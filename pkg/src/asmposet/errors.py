"""Exception types shared by every module.

All domain failures derive from :class:`AsmPosetError`, itself a
``ValueError``, so callers can catch broadly or by kind.
"""


class AsmPosetError(ValueError):
    """Base class for domain and validation failures."""


class ParseError(AsmPosetError):
    """Malformed textual input; ``position`` is a 0-based character offset."""

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class RangeError(AsmPosetError):
    """An order ``n`` outside the range an operation supports."""

    def __init__(self, what, n, lo, hi):
        self.n = n
        self.lo = lo
        self.hi = hi
        super().__init__(f"{what}: n={n} outside supported range {lo}..{hi}")


class SequenceError(AsmPosetError):
    """A sign or binary sequence violating an invariant."""


class VertexError(AsmPosetError):
    """Malformed vertex or mismatched vertex lengths."""


# ASM validation -----------------------------------------------------------

class AsmError(AsmPosetError):
    """Base for ASM validation failures."""


class NonSquare(AsmError):
    def __init__(self, detail="matrix is not square"):
        super().__init__(f"NonSquare: {detail}")


class BadEntry(AsmError):
    def __init__(self, i, j, value):
        self.i, self.j, self.value = i, j, value
        super().__init__(f"BadEntry({i},{j}): {value!r} not in {{-1,0,1}}")


class RowNotAlternating(AsmError):
    def __init__(self, i, reason=""):
        self.i = i
        super().__init__(f"RowNotAlternating({i})" + (f": {reason}" if reason else ""))


class ColumnNotAlternating(AsmError):
    def __init__(self, j, reason=""):
        self.j = j
        super().__init__(f"ColumnNotAlternating({j})" + (f": {reason}" if reason else ""))


# chain validation ---------------------------------------------------------

class ChainError(AsmPosetError):
    """Base for maximal-chain validation failures."""


class WrongLength(ChainError):
    def __init__(self, detail):
        super().__init__(f"WrongLength: {detail}")


class BadEndpoints(ChainError):
    def __init__(self, detail):
        super().__init__(f"BadEndpoints: {detail}")


class NotACover(ChainError):
    def __init__(self, i, lower, upper):
        self.i = i
        super().__init__(f"NotACover({i}): {upper} does not cover {lower}")


# symmetry -----------------------------------------------------------------

class NotABijection(AsmPosetError):
    """A vertex map that is not a permutation of the vertex set."""


class ModulusMismatch(AsmPosetError):
    """Dihedral elements or vertices of different orders combined."""
