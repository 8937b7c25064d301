"""Exception hierarchy shared by all modules."""


class InfraError(Exception):
    """Base class for every error raised by this package."""


class DivisionByZero(InfraError, ZeroDivisionError):
    pass


class ModulusMismatch(InfraError, ValueError):
    pass


class InvalidInput(InfraError, ValueError):
    pass


class NotRealModel(InvalidInput):
    """D(x) has odd degree or a non-square leading coefficient."""


class NotSquarefree(InvalidInput):
    pass


class EvenCharacteristic(InvalidInput):
    pass


class TrivialInfrastructure(InvalidInput):
    """|X| = 1; baby steps would have a fixed point."""


class BackendMismatch(InfraError, ValueError):
    """A point was handed to a backend that did not produce it."""


class CycleTooLong(InfraError):
    """Enumeration exceeded its configured cap."""


class NotReduced(InfraError, ValueError):
    pass


class CurveTooLarge(InfraError):
    pass


class FTooLarge(InfraError, ValueError):
    pass


class BadOrder(InfraError, ValueError):
    pass


class BadModuli(InfraError, ValueError):
    pass


class NotAMultiple(InfraError, ValueError):
    pass


class NotInSubgroup(InfraError):
    """The target does not lie in the subgroup generated by the base."""

    def __init__(self, prime, message=None):
        self.prime = prime
        super().__init__(message or f"target not in subgroup (failing prime {prime})")
