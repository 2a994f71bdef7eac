"""Exception hierarchy shared by every protonspread module."""


class ProtonSpreadError(Exception):
    """Base class for all errors raised by protonspread."""


class DimensionError(ProtonSpreadError, TypeError):
    """Quantities of incompatible dimension were combined or converted."""


class DomainError(ProtonSpreadError, ValueError):
    """A value lies outside the domain of the operation (e.g. a negative width)."""


class ConfigurationError(ProtonSpreadError, ValueError):
    """A scenario or sweep request is inconsistent.

    ``key_path`` names the offending location in a scenario document
    (``"model.params.R"``) when the error came from file parsing.
    """

    def __init__(self, message, key_path=None):
        if key_path:
            message = f"{key_path}: {message}"
        super().__init__(message)
        self.key_path = key_path


class NumericalFailure(ProtonSpreadError, ArithmeticError):
    """Quadrature did not reach tolerance before its refinement cap."""
