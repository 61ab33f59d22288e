"""Exception types shared across the package."""


class ParameterError(ValueError):
    """Invalid input parameters (bad prime, exponent, residue, ...)."""


class RangeError(ParameterError):
    """Input outside the supported integer range."""


class UnsupportedError(ParameterError):
    """Parameters are valid but no method covers them (e.g. Wieferich prime)."""


class ResourceLimitError(RuntimeError):
    """A configured search limit would be exceeded.

    ``limit`` names the violated setting, e.g. ``"pattern_budget"``.
    """

    def __init__(self, limit: str, message: str):
        super().__init__(f"{limit}: {message}")
        self.limit = limit
