"""Exception hierarchy shared by every module of the package."""


class AutomatonError(Exception):
    """Base class for all errors raised by :mod:`nfca`."""


class RejectedInputError(AutomatonError, ValueError):
    """A word contains a symbol outside the automaton's alphabet."""


class NoWitnessError(AutomatonError, LookupError):
    """A state is unreachable, so no word leads to it."""


class DomainError(AutomatonError, ValueError):
    """Arguments outside the domain of an operation."""


class PreconditionError(AutomatonError, ValueError):
    """An operation's input does not satisfy its documented precondition."""


class FixtureIntegrityError(AutomatonError):
    """A hand-transcribed automaton fails its own machine check."""


class ParseError(AutomatonError, ValueError):
    """Malformed text input; ``lineno`` is 1-based, or None for whole-file errors."""

    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
