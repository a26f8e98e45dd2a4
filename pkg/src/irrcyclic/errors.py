"""Exception types shared across the package."""


class Error(Exception):
    """Base class for every package-specific error."""


class NotPrime(Error):
    """A parameter that must be prime is not."""


class NotCoprime(Error):
    """Two parameters that must be coprime are not."""


class NotADivisor(Error):
    """A parameter that must divide another does not."""


class NotDivisible(Error):
    """A derived quantity fails a required divisibility condition."""


class EvenPrime(Error):
    """The characteristic must be odd for this operation."""


class EvenCharacteristic(Error):
    """Quadratic character machinery is undefined in characteristic two."""


class ZeroHasNoLog(Error):
    """Discrete logarithm of the zero element was requested."""


class SizeBudgetExceeded(Error):
    """An exact enumeration would exceed the configured size budget."""


class NoRepresentation(Error):
    """The requested diophantine representation does not exist."""


class BadDiscriminant(Error):
    """The discriminant is outside the supported family."""


class IrrationalPeriod(Error):
    """A closed form produced an irrational value where an integer is required."""


class NotSemiprimitive(Error):
    """The semiprimitivity condition p^j = -1 (mod N) has no solution j."""


class NotIndexTwo(Error):
    """The parameters do not satisfy the index-two hypotheses."""


class NonIntegralWeight(Error):
    """A weight formula produced a non-integer; the inputs are inconsistent."""


class OrderNotPrimePower(Error):
    """The multiplicative order is not the required prime power."""


class Unsupported(Error):
    """No closed form applies and exhaustive search is out of budget."""
