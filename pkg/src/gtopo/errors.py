"""Exception types shared across the package.

Every failure the library can signal deliberately is one of these four, so
callers (and the CLI exit-code mapping) can tell bad input apart from
well-formed input that violates a mathematical precondition, and both apart
from work that was refused because it would not terminate in reasonable time.
"""


class InputError(ValueError):
    """Malformed input: unparsable text, ill-typed JSON, out-of-range index."""


class PreconditionError(ValueError):
    """Well-formed input that violates a documented mathematical precondition.

    Examples: a family that is not union-closed where a space is required,
    non-disjoint sets handed to a separation routine, a pair with no gap
    handed to the ramp builder.
    """


class ResourceError(RuntimeError):
    """Refused: the requested computation is too large to finish honestly."""


class ExprError(InputError):
    """Parse failure in the set/map expression grammar, with a position."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


class NoExtension(Exception):
    """A continuous extension was required to exist but does not.

    Carries the blocking data so reports can show it rather than a bare "no".
    """

    def __init__(self, reason: str, blocking=None):
        super().__init__(reason)
        self.reason = reason
        self.blocking = blocking
