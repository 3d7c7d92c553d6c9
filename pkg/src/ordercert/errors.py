"""Exception types shared across the certificate pipeline.

Everything raised deliberately by this package derives from CertError,
so the CLI can separate input problems and failed certifications from
genuine bugs.
"""

from __future__ import annotations


class CertError(Exception):
    """Base class for all deliberate failures raised by ordercert."""


class InputError(CertError):
    """Malformed or inconsistent input data (files, options, formats)."""


class ParseError(InputError):
    pass


# ---- interval layer ----


class DivisorContainsZero(CertError):
    """Interval or box division where the divisor cannot exclude zero."""


class DomainViolation(CertError):
    """Argument outside the provable domain of an interval function
    (negative reals under sqrt, boxes meeting the branch ray under arg)."""


class NotCertifiedSL2(CertError):
    """Matrix inverse requested without an exact det = 1 certificate."""


class PrecisionCollapse(CertError):
    """Intervals became too wide to carry information at this precision."""


# ---- triangulations and combinatorics ----


class BadGluingData(InputError):
    """Face gluing table is not a valid fixed-point-free involution."""


class NonOrientable(CertError):
    pass


class EdgeReversedOntoItself(CertError):
    """An edge is glued to itself with reversed orientation."""


class NotClosedOrIdeal(CertError):
    """A vertex link is neither a sphere nor a torus."""


class MissingPeripheralData(InputError):
    pass


class NotIdealTriangulation(InputError):
    """An operation needing an ideal triangulation received another kind."""


class InvalidSite(InputError):
    """Requested move site does not have the required local structure."""


class NotAcyclic(CertError):
    pass


class NotFoliar(CertError):
    """An operation requiring a foliar orientation received one that isn't."""


class SinkEdgePresent(CertError):
    pass


class ArcsDoNotClose(CertError):
    """Annulus boundary arcs fail to concatenate into closed curves."""


class NonIntegralCochain(CertError):
    """An odd count appeared where the structure forces even parity."""


class NotRationalHomologySolidTorus(CertError):
    pass


# ---- linear algebra over Z ----


class DimensionMismatch(InputError):
    pass


# ---- certified solving ----


class SingularIntervalJacobian(CertError):
    pass


class NoContraction(CertError):
    """Krawczyk operator failed to map the box into its interior."""


class NonPositiveImaginaryPart(CertError):
    def __init__(self, index):
        self.index = index
        super().__init__("shape %d: imaginary part not provably positive" % index)


class DegenerateShape(CertError):
    """A real shape box fails to exclude the degenerate values 0 and 1."""


class HyperbolicityWitnessFailed(CertError):
    """No slope with provably hyperbolic holonomy was found."""


# ---- developing maps and holonomy ----


class PathNotClosed(InputError):
    pass


# ---- order trees ----


class MalformedTree(InputError):
    pass


class BallTooSmall(CertError):
    """Positive-cone search exhausted the Cayley ball without contradiction."""


class SearchTimeout(CertError):
    pass


# ---- the universal cover of PSL(2,R) ----


class BranchRayAmbiguity(CertError):
    """A rotation-number box meets the branch ray; the lift is ambiguous."""


class BranchCutUncertain(CertError):
    """Multiplication in the cover cannot place the correction term."""


class CentralValueAmbiguous(CertError):
    """A relator's translation part does not isolate one multiple of 2*pi."""


class LiftObstructed(CertError):
    """The central extension class is nonzero; no lift exists."""
