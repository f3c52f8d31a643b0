"""Exception hierarchy shared by the library and the CLI."""

from __future__ import annotations


class WaringError(Exception):
    """Base class for every error raised by this package."""

    exit_code = 1
    kind = "error"

    def to_dict(self) -> dict:
        return {"error": self.kind, "message": str(self)}


class ParseError(WaringError, ValueError):
    """Malformed form expression; ``position`` is a 0-based column."""

    exit_code = 2
    kind = "parse_error"

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position

    def to_dict(self) -> dict:
        out = super().to_dict()
        out["position"] = self.position
        return out


class DomainError(WaringError, ValueError):
    """Input outside an operation's domain: zero form, degree 0, bad role..."""

    exit_code = 3
    kind = "domain_error"


class NotABinomial(DomainError):
    kind = "not_a_binomial"


class SearchFailed(WaringError, RuntimeError):
    """A randomized search ran out of its retry budget."""

    exit_code = 4
    kind = "search_failed"


class ConvergenceError(WaringError, RuntimeError):
    """A numerical iteration did not reach its target accuracy."""

    exit_code = 4
    kind = "convergence_error"


class VerificationError(WaringError, AssertionError):
    """Two independent routes disagreed."""

    exit_code = 4
    kind = "verification_failed"
