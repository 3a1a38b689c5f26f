"""
Exception classes for the Lefschetz decision library
"""


class LefschetzError(Exception):
    """Base exception for all library errors"""
    pass


class InvalidDegreesError(LefschetzError):
    """Exception for malformed generator degree tuples"""
    pass


class InvalidCharacteristicError(LefschetzError):
    """Exception for a characteristic that is neither zero nor a prime"""
    pass


class PreconditionError(LefschetzError):
    """Exception for an operation applied outside its hypotheses.

    The violated hypothesis is kept on the instance so the CLI can name it.
    """

    def __init__(self, hypothesis: str, message: str = ""):
        self.hypothesis = hypothesis
        super().__init__(message or hypothesis)


class FieldMismatchError(LefschetzError):
    """Exception for arithmetic between polynomials over different fields"""
    pass


class FormulaError(LefschetzError):
    """Exception for an inconsistent closed-form evaluation"""
    pass


class DimensionGuardError(LefschetzError):
    """Exception for matrices too large for the brute-force routes"""
    pass


class ConfigurationError(LefschetzError):
    """Exception for configuration-related errors"""
    pass
