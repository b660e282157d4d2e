"""Exception types shared across the package."""


class SuperGaudinError(Exception):
    """Base class for all package-specific errors."""


class InvalidParity(SuperGaudinError, ValueError):
    """Parity sequence violates the standing conventions (first entry even, counts match)."""


class DimensionMismatch(SuperGaudinError, ValueError):
    """Operands live in spaces of different dimensions."""


class MissingParity(SuperGaudinError, ValueError):
    """An operator without a declared parity was used where the Koszul sign is needed."""


class InvalidHook(SuperGaudinError, ValueError):
    """Partition violates the hook condition for the given (m, n)."""


class DuplicateSite(SuperGaudinError, ValueError):
    """Two chain sites share the same spectral point."""


class PoleCollision(SuperGaudinError, ArithmeticError):
    """Evaluation hit (or came within tolerance of) a pole of a rational expression."""


class TooLarge(SuperGaudinError, ValueError):
    """Requested computation exceeds a configured size cap."""


class NoSuchComponent(SuperGaudinError, ValueError):
    """The requested irreducible summand does not occur in the tensor product."""


class NonPolynomialModule(SuperGaudinError, ValueError):
    """Construction requires a polynomial module and the input is not one."""


class InternalInconsistency(SuperGaudinError, RuntimeError):
    """An invariant that should hold by construction failed; indicates a bug."""


class UnsupportedInstance(SuperGaudinError, ValueError):
    """No solve route covers this chain/root-count combination."""
