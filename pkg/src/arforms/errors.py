"""Exception hierarchy shared across the package."""


class ArformsError(Exception):
    """Base class for every error raised by arforms."""


class NotPolynomial(ArformsError, ValueError):
    """A rational function was asked to be a Laurent polynomial but is not."""


class ParseError(ArformsError, ValueError):
    def __init__(self, line: int, message: str):
        self.line = line
        self.message = message
        super().__init__(f"line {line}: {message}")


class UnknownObject(ArformsError, KeyError):
    def __str__(self):
        return f"unknown object {self.args[0]!r}"


class InfiniteOrbit(ArformsError, ValueError):
    """Raised when a computation needs to enumerate all indecomposables."""


class FiniteSupportRequired(ArformsError, ValueError):
    """The t-form was requested on a category without finite shift support."""

    def __init__(self, detail: str = ""):
        msg = "hypothesis 4.2 required"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class DualityViolation(ArformsError):
    """An AR triangle failed the duality check against the hom data."""


class MissingCrossForm(ArformsError, ValueError):
    pass


class InvalidRim(ArformsError, ValueError):
    pass


class WindowTooSmall(ArformsError, ValueError):
    pass
