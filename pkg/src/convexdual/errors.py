"""Exception hierarchy. Every error carries a stable ``code`` string."""


class ConvexError(ValueError):
    code = "ERROR"

    def __init__(self, message: str = "", code: str | None = None):
        if code is not None:
            self.code = code
        super().__init__(f"{self.code}: {message}" if message else self.code)


class InvalidBody(ConvexError):
    """Raised when a piece list fails validation; ``report`` holds details."""

    code = "INVALID_BODY"

    def __init__(self, report):
        self.report = report
        super().__init__(report.message, code=report.code)


class NumericNonconvergence(ConvexError):
    code = "NUMERIC_NONCONVERGENCE"


class NotOnBoundary(ConvexError):
    code = "NOT_ON_BOUNDARY"


class NotAFace(ConvexError):
    code = "NOT_A_FACE"


class NotATouchingCone(ConvexError):
    code = "NOT_A_TOUCHING_CONE"


class NotExposed(ConvexError):
    code = "NOT_EXPOSED"


class PreconditionError(ConvexError):
    code = "PRECONDITION"


class GalleryError(ConvexError):
    code = "BAD_PARAM"


class SpecParseError(ConvexError):
    code = "PARSE_ERROR"
