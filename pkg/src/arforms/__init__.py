"""Hom-dimension forms on Grothendieck groups of triangulated categories."""

from .category import (
    ARTriangle,
    CategoryPresentation,
    ObjectRef,
    OrbitDecl,
    emit,
    parse,
    parse_file,
    validate,
)
from .laurent import LaurentPoly, T, parse_laurent, sigma
from .ratfun import RatFun, to_laurent

__version__ = "0.1.0"
