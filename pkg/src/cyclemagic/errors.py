"""Exception types shared across the package."""


class CycleMagicError(Exception):
    pass


class ParameterOutOfRange(CycleMagicError, ValueError):
    def __init__(self, param, value, allowed):
        self.param = param
        self.value = value
        self.allowed = allowed
        super().__init__(f"{param}={value} out of range (allowed: {allowed})")


class UnsupportedLength(CycleMagicError, ValueError):
    pass


class ForeignCycle(CycleMagicError, ValueError):
    pass


class NotConsecutive(CycleMagicError, ValueError):
    def __init__(self, sums):
        self.sums = sorted(sums)
        super().__init__(f"edge sums are not consecutive integers: {self.sums}")


class DomainMismatch(CycleMagicError, ValueError):
    pass


class NoCovering(CycleMagicError, ValueError):
    pass


class NonIntegralLabel(CycleMagicError, ArithmeticError):
    """A formula with /2 or /4 produced a non-integer; treated as a typo trigger."""
