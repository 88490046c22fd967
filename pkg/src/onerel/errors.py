"""Exception types shared across the package."""


class OnerelError(Exception):
    """Base class for errors raised by this package."""


class InputError(OnerelError, ValueError):
    """The input violates a precondition (proper power, empty relator, ...)."""


class NotABasisError(InputError):
    """A map that must be a Nielsen basis pair is not one."""


class TheoryViolation(OnerelError):
    """An automorphism witness pattern that the classification rules out.

    Seeing this means a bug, not bad input.
    """

    def __init__(self, message: str, witnesses=None):
        super().__init__(message)
        self.witnesses = witnesses


class HypothesisError(InputError):
    """A small-cancellation presentation fails one or more hypotheses."""

    def __init__(self, failures: list[str]):
        super().__init__("; ".join(failures))
        self.failures = list(failures)
