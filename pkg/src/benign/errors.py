"""Exception types shared across the package."""


class Error(Exception):
    """Base class for all package errors."""


class NegativeSupport(Error):
    """Tuple notation requested for a function with negative support."""


class BoundTooTight(Error):
    """Enumeration could not be certified exact at the given bounds."""

    def __init__(self, reason, subexpr=None):
        self.reason = reason
        self.subexpr = subexpr
        msg = reason if subexpr is None else f"{reason} in {subexpr}"
        super().__init__(msg)


class SetTooLarge(Error):
    """Materializing an enumeration would exceed the size cap."""


class UnknownGenerator(Error):
    """A letter does not belong to the declared alphabet."""


class ForeignGenerator(Error):
    """A word uses generators outside the operation's expected set."""


class SupportOutOfRange(Error):
    """Encoding precondition violated: support must lie in [0, m)."""


class MalformedRule(Error):
    """Stable-letter rule data is inconsistent."""


class NameCollision(Error):
    """Generator names collide and renaming is disabled."""


class NonTermination(Error):
    """Rewriting exceeded its step budget."""

    def __init__(self, budget):
        self.budget = budget
        super().__init__(f"rewriting did not terminate within {budget} steps")


class BlockNotInB(Error):
    """A block of the target function is rejected by the membership oracle."""


class UnknownName(Error):
    """Catalog lookup with an unrecognized name."""


class UnknownCase(Error):
    """Verification case id not in the catalog."""


class ParseError(Error):
    """Malformed expression, tuple, word, or presentation text."""
