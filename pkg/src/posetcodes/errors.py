"""Typed errors raised by the library.

Everything derives from :class:`PosetCodeError`, which is a ``ValueError``
so that generic callers can catch invalid-input conditions uniformly.
"""


class PosetCodeError(ValueError):
    """Base class for all library errors."""


# -- field construction and arithmetic ----------------------------------

class NonPrimeModulus(PosetCodeError):
    """The requested characteristic is not a prime number."""


class ReduciblePolynomial(PosetCodeError):
    """The defining polynomial of an extension factors over its base."""


class DivisionByZero(PosetCodeError):
    """Multiplicative inverse of zero requested."""


# -- posets --------------------------------------------------------------

class CycleDetected(PosetCodeError):
    """Cover relations contain a directed cycle (antisymmetry violated)."""


class IndexOutOfRange(PosetCodeError):
    """A poset element is outside the ground set 1..n."""


# -- codes ---------------------------------------------------------------

class MixedLengths(PosetCodeError):
    """Generators of differing lengths were supplied."""


class EmptyAmbient(PosetCodeError):
    """The ambient space has no coordinates (length < 1)."""


class CodeTooLarge(PosetCodeError):
    """An exhaustive enumeration would exceed the configured cap."""


class LengthMismatch(PosetCodeError):
    """Vector length does not match the poset or ambient length."""


class TrivialCode(PosetCodeError):
    """Minimum-distance style quantities are undefined for the zero code."""


class NotNested(PosetCodeError):
    """The smaller code is not contained in the larger one."""


class EqualCodes(PosetCodeError):
    """A strict inclusion of codes was required but they are equal."""


class KOutOfRange(PosetCodeError):
    """A dimension parameter is outside its admissible range."""


class DependentRows(PosetCodeError):
    """Rows of a generator matrix are linearly dependent over the subfield."""


# -- bilinear forms and duality -------------------------------------------

class FormAmbientMismatch(PosetCodeError):
    """The chosen inner product does not match the ambient space of the code."""


class NotSelfOrthogonal(PosetCodeError):
    """The code is not contained in its dual under the required form."""


class QuotientNotInBaseField(PosetCodeError):
    """An intermediate quantity left the base field; indicates an arithmetic bug."""


# -- stabilizer machinery ---------------------------------------------------

class NotLiftable(PosetCodeError):
    """No phase assignment in the p-th-root error group lifts the code to a
    scalar-free abelian operator group (only possible in characteristic 2)."""


class NotPure(PosetCodeError):
    """The stabilizer group contains a non-scalar element below the minimum weight."""


class KNotAboveOne(PosetCodeError):
    """The operation requires a stabilizer code of dimension K > 1."""


class DimensionCap(PosetCodeError):
    """The dense simulation dimension exceeds the supported cap."""


class SearchExhausted(PosetCodeError):
    """A search finished its budget without finding a witness."""
