"""Exception types shared across the package."""


class TotReflError(Exception):
    pass


class FieldMismatch(TotReflError, ValueError):
    pass


class ShapeError(TotReflError, ValueError):
    pass


class RingMismatch(TotReflError, ValueError):
    pass


class CapExceeded(TotReflError, ArithmeticError):
    """A product in the deformation ring needs a larger x-degree cap."""


class ZeroElement(TotReflError, ValueError):
    pass


class NotLinear(TotReflError, ValueError):
    def __init__(self, message, position=None):
        super().__init__(message)
        self.position = position


class NotNormalizable(TotReflError, ValueError):
    pass


class BudgetExceeded(TotReflError, RuntimeError):
    pass


class InvalidModule(TotReflError, ValueError):
    pass
