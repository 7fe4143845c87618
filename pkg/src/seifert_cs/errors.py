"""Exception hierarchy.

Every input-validation failure derives from :class:`SeifertError`, which the
CLI maps to exit status 2.
"""


class SeifertError(ValueError):
    pass


class InvalidAlpha(SeifertError):
    pass


class NotCoprime(SeifertError):
    pass


class NegativeGenus(SeifertError):
    pass


class NonContactData(SeifertError):
    pass


class IndexOutOfRange(SeifertError, IndexError):
    pass


class EnumerationTooLarge(SeifertError):
    pass


class NegativeCurvatureIntegral(SeifertError):
    pass


class NonPositiveEpsilon(SeifertError):
    pass


class InvalidLevel(SeifertError):
    pass


class ParseError(SeifertError):
    def __init__(self, position, expected, text=None):
        self.position = position
        self.expected = expected
        self.text = text
        msg = f"parse error at position {position}: expected {expected}"
        if text is not None:
            msg += f"\n  {text}\n  {' ' * position}^"
        super().__init__(msg)
