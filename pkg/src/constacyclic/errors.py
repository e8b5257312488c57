"""Exception types shared across the package."""


class BadParams(ValueError):
    """Parameters violate a construction hypothesis (divisibility, ranges)."""


class NotPrimitive(ValueError):
    """A supplied modulus does not make the indeterminate a primitive element."""


class DivByZero(ZeroDivisionError):
    """Inversion or division by the zero field element."""


class OutOfRange(ValueError):
    """An integer argument falls outside its documented range."""


class CoefficientLeak(ArithmeticError):
    """A polynomial coefficient escaped the declared coefficient subfield."""


class ZeroConstantTerm(ValueError):
    """Reciprocal of a polynomial with f(0) = 0 is undefined here."""


class NotCosetClosed(ValueError):
    """A would-be defining set is not a union of q-cyclotomic cosets."""


class ShiftMismatch(ValueError):
    """Operands are constacyclic with different shift constants or towers."""


class LengthMismatch(ValueError):
    """A vector has the wrong length for the code at hand."""


class NoProgression(RuntimeError):
    """No arithmetic progression of length >= 1 found; only possible for an
    empty target set, which signals a caller bug."""


class BudgetExceeded(RuntimeError):
    """An enumeration would exceed its operation-count budget; refused."""
