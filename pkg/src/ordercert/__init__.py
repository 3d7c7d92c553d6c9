"""Certified computation toolkit for orderability and taut-foliation
certificates on triangulated 3-manifolds.

The interval layer (dyadic, intervals, elementary) is the trust root:
everything downstream reduces its claims to exact integer identities
plus interval enclosures produced here.
"""

__version__ = "0.1.0"

from .intervals import ComplexBox, IntervalMatrix2, RealInterval

__all__ = ["RealInterval", "ComplexBox", "IntervalMatrix2", "__version__"]
