"""Exception types shared across the package.

Everything raised deliberately by the library derives from LoophomError, so
callers can catch one base class. Where a standard exception fits (division
by zero, bad lookups) the class also inherits the builtin, so generic
handlers keep working.
"""


class LoophomError(Exception):
    """Base class for all errors raised by this package."""


class CompositeCharacteristic(LoophomError, ValueError):
    """Field constructor was given a characteristic that is not prime."""


class DivisionByZero(LoophomError, ZeroDivisionError):
    """Multiplicative inverse of zero was requested."""


class FieldMismatch(LoophomError, TypeError):
    """Arithmetic attempted between scalars over different fields."""


class ParityViolation(LoophomError, ValueError):
    """Generator kind is incompatible with its degree parity.

    Away from characteristic 2, graded commutativity forces odd-degree
    generators to square to zero (Exterior) and even-degree generators to
    be strictly commuting (Polynomial, Laurent or Truncated).
    """


class DuplicateName(LoophomError, ValueError):
    """Two generators of one algebra were declared with the same name."""


class LaurentNonzeroDegree(LoophomError, ValueError):
    """Laurent (invertible) generators are only supported in degree 0."""


class UnknownGenerator(LoophomError, KeyError):
    """A generator id or name does not exist in the algebra."""


class AlgebraMismatch(LoophomError, TypeError):
    """Operation mixed elements of two different algebras."""


class InfiniteBasis(LoophomError, ValueError):
    """The finiteness certificate fails: some bigraded piece is infinite."""


class InhomogeneousImage(LoophomError, ValueError):
    """A differential was given a generator image that mixes bidegrees."""


class WrongBidegree(LoophomError, ValueError):
    """A differential image is homogeneous but sits in the wrong bidegree."""


class NotSquareZero(LoophomError, ValueError):
    """The proposed generator images do not satisfy d(d(g)) = 0."""


class CutoffTooTight(LoophomError, ValueError):
    """Requested degrees reach past the algebra's completeness horizon.

    Homology at top degree D needs a complete basis one degree above D;
    rebuild the page with a larger cutoff.
    """


class NotAChainMap(LoophomError, ValueError):
    """A claimed inclusion of differential algebras fails to commute."""


class OddN(LoophomError, ValueError):
    """A check only defined for even projective-space dimension got odd n."""
