"""Exception types shared across the package."""


class DomainError(ValueError):
    """An input violates the precondition of an operation."""


class AlphabetMismatch(DomainError):
    """Two polynomials live in different variable universes."""


class InexactDivision(ArithmeticError):
    """A division that must be exact left a remainder (internal bug)."""
