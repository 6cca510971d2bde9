"""Exception types shared across the package."""


class AuslanderError(Exception):
    """Base class for all errors raised by this package."""


class InputError(AuslanderError, ValueError):
    """Malformed or inconsistent user input (schema errors, bad presentations)."""


class NotAdmissible(AuslanderError):
    """A normal-form path of the maximal length survived reduction."""

    def __init__(self, path, bound):
        self.path = path
        self.bound = bound
        super().__init__(f"path {'*'.join(path)} of length {bound} survives; ideal not admissible within bound")


class FieldTooSmall(AuslanderError):
    """The trace-form radical needs characteristic 0 or p larger than the dimension."""

    def __init__(self, p, dim):
        self.p = p
        self.dim = dim
        super().__init__(f"trace-form radical needs p > {dim}, got p = {p}")


class NonSplit(AuslanderError):
    """An endomorphism ring has a semisimple quotient that is not split over the field."""

    def __init__(self, dim, message=None):
        self.dim = dim
        super().__init__(message or f"non-split semisimple block (dimension {dim})")


class NoProjectiveInjective(AuslanderError):
    """A nonzero algebra without projective-injective modules was handed to the inverse map."""


class BoundExceeded(AuslanderError):
    """A search hit its explicit bound without reaching a conclusion."""

    def __init__(self, what, bound):
        self.what = what
        self.bound = bound
        super().__init__(f"{what}: bound {bound} exceeded")
