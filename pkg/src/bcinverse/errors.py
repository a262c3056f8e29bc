"""Exception hierarchy shared by every layer of the package."""


class BCInverseError(Exception):
    """Base class for all errors raised by this package."""


class RingSpecError(BCInverseError, ValueError):
    """A ring spec string or RingSpec value is malformed."""


class CardinalityExceeded(BCInverseError):
    """The requested ring is larger than the configured cap."""

    def __init__(self, order: int, cap: int):
        super().__init__(f"ring order {order} exceeds cardinality cap {cap}")
        self.order = order
        self.cap = cap


class RingAxiomError(BCInverseError):
    """A constructed ring violated a ring axiom (construction bug)."""


class RingMismatchError(BCInverseError, ValueError):
    """Elements or subsets from different rings were combined."""


class LiteralError(BCInverseError, ValueError):
    """An element literal does not parse or does not belong to the ring."""

    def __init__(self, token: str, reason: str):
        super().__init__(f"bad element literal {token!r}: {reason}")
        self.token = token


class NotAUnitError(BCInverseError, ValueError):
    """unit_inverse was called on an element without a two-sided inverse."""


class PreconditionError(BCInverseError, ValueError):
    """An operation's documented precondition does not hold."""


class EngineInconsistency(BCInverseError):
    """Two routes that must agree did not; always indicates a bug."""


class BudgetExceeded(BCInverseError):
    """A sweep was requested on a ring larger than the harness budget."""
