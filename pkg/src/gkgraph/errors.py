"""Exception hierarchy shared by every module of the toolkit."""


class GKGraphError(Exception):
    """Base class for all errors raised by gkgraph."""


class NonPrimeCharacteristic(GKGraphError, ValueError):
    pass


class DegreeOutOfRange(GKGraphError, ValueError):
    pass


class MixedFields(GKGraphError, ValueError):
    pass


class DivisionByZero(GKGraphError, ZeroDivisionError):
    pass


class ZeroElement(GKGraphError, ValueError):
    pass


class BudgetExceeded(GKGraphError):
    """Enumeration outgrew its element budget.

    ``count`` is the number of elements collected when the limit was hit.
    """

    def __init__(self, count, budget):
        super().__init__(f"enumeration exceeded budget of {budget} elements (reached {count})")
        self.count = count
        self.budget = budget


class IncompatibleGenerators(GKGraphError, ValueError):
    pass


class MalformedFixture(GKGraphError, ValueError):
    pass


class UnknownFormat(GKGraphError, ValueError):
    pass


class FieldLacksRoots(GKGraphError, ValueError):
    pass


class IdentificationFailed(GKGraphError):
    pass


class UnknownSpec(GKGraphError, ValueError):
    pass


class MissingFixture(GKGraphError, FileNotFoundError):
    pass


class FixtureOrderMismatch(GKGraphError):
    pass
