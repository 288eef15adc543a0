"""Exception types shared across the library."""


class SpreadCodesError(Exception):
    """Base class for all errors raised by this library."""


class NotPrime(SpreadCodesError):
    """The requested field characteristic is not a prime number."""


class DivisionByZero(SpreadCodesError, ZeroDivisionError):
    """Multiplicative inverse of the zero element was requested."""


class IncompatibleFields(SpreadCodesError):
    """No subfield embedding exists between the two fields."""


class AmbientMismatch(SpreadCodesError):
    """Operands live in different ambient spaces or over different fields."""


class ZeroSubspace(SpreadCodesError):
    """The operation requires a nonzero subspace."""


class BadParams(SpreadCodesError):
    """Parameters are outside the valid range for the operation."""


class BadAmbient(SpreadCodesError):
    """The operation requires ambient dimension 2(k+1)."""


class GradeMismatch(SpreadCodesError):
    """Wedge operands have incompatible grades or vector lengths."""


class NotDecomposable(SpreadCodesError):
    """The wedge vector is not a wedge of independent vectors, so it does
    not correspond to any subspace."""


class BadFlag(SpreadCodesError):
    """Flag parameters violate delta <= dim(x) <= k."""


class WrongT(SpreadCodesError):
    """The operation is only defined for line spreads (t = 1)."""


class BadDim(SpreadCodesError):
    """Received subspace dimension is outside the decodable range."""


class BadSpec(SpreadCodesError):
    """Corruption parameters are infeasible for the given codeword."""


class EnumerationOverflow(SpreadCodesError):
    """The solution space is too large to scan; the received subspace is
    far outside the code's error-correction capacity."""
