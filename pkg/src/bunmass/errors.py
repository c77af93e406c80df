"""Exception types shared across the package."""


class ValidationError(ValueError):
    """Input data does not describe a valid object (bad label, bad q, ...)."""


class DomainError(ValueError):
    """Argument lies outside the domain where the operation is defined."""


class CurveValidationError(ValidationError):
    """A Weil numerator failed one of the curve checks.

    ``r`` is the extension degree at which the check failed, or None for
    structural failures such as the functional equation.
    """

    def __init__(self, message, r=None):
        super().__init__(message)
        self.r = r


class SpecParseError(ValidationError):
    """Malformed group or curve spec string."""

    def __init__(self, text, position, expected):
        self.text = text
        self.position = position
        self.expected = expected
        pointer = " " * position + "^"
        super().__init__(
            f"cannot parse {text!r} at position {position}: expected {expected}\n"
            f"  {text}\n  {pointer}"
        )
