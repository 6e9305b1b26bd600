class ChevkitError(Exception):
    """Base class for every error raised by the toolkit"""


class UnsupportedTypeError(ChevkitError):
    pass


class NotARootError(ChevkitError):
    pass


class ModulusMismatchError(ChevkitError):
    pass


class NotAUnitError(ChevkitError):
    pass


class NotSigmaStableError(ChevkitError):
    pass


class FieldError(ChevkitError):
    """Zero inversion, missing root of unity, or a gcd precondition failure"""


class ParameterError(ChevkitError):
    pass


class EngineError(ChevkitError):
    """An internal consistency check of an engine failed"""


class ClassLookupError(ChevkitError):
    pass


class InvalidInputError(ChevkitError):
    pass
