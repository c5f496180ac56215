"""Exception and warning types shared across the package."""


class SigmaForgeError(Exception):
    """Base class for all package errors."""


class ZeroPolynomial(SigmaForgeError):
    """Operation requires a nonzero polynomial."""


class ZeroInput(SigmaForgeError):
    """Resultant of a zero polynomial is undefined."""


class ZeroArgument(SigmaForgeError):
    """p-adic valuation of 0 is infinite; callers handle that case themselves."""


class NotPrime(SigmaForgeError):
    """A prime number was required."""


class UnsupportedRank(SigmaForgeError):
    """Polyhedral and spherical computations are implemented for rank <= 2 only."""


class TooLarge(SigmaForgeError):
    """A configured enumeration bound was exceeded."""


class ZeroResidue(SigmaForgeError):
    """f vanishes identically mod p (p divides the content)."""


class FactorizationIncomplete(SigmaForgeError):
    """The bounded factor search gave up; the status is propagated, never guessed."""


class WholeSphere(SigmaForgeError):
    """Boundary points are undefined for the whole sphere."""


class NotACurve(SigmaForgeError):
    """Puiseux expansion requires a polynomial genuinely involving y."""


class ExtensionRequired(SigmaForgeError):
    """A root lies outside Q and the single supported algebraic extension."""


class ZeroSeries(SigmaForgeError):
    """Fractional powers of the zero series are undefined."""


class InsufficientPrecision(SigmaForgeError):
    """The series carry too few terms for the requested relation search."""


class Undetermined(SigmaForgeError):
    """Only the series test was available and it could not certify the answer."""


class NotIrreducible(SigmaForgeError):
    """Operation requires a non-unit polynomial irreducible over Q."""


class UnitPolynomial(SigmaForgeError):
    """The quotient by a unit is the zero ring."""


class PolynomialSyntaxError(SigmaForgeError):
    """Parse error; carries the 0-based input position."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class FractionalExponent(PolynomialSyntaxError):
    """Exponents must be integers."""


class UnknownVariable(PolynomialSyntaxError):
    """Identifier is not among the declared variables."""


class UnitPolynomialWarning(UserWarning):
    """An empty corner locus / degenerate quotient was encountered; surfaced, not silent."""
