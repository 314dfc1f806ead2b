"""Exact verification toolkit for nilpotent Lie superalgebras of dimension <= 5.

The package provides exact arithmetic over Q(i, sqrt(2)), Puiseux series in a
deformation parameter, finite-dimensional Lie superalgebras given by structure
constants, their invariants and even second cohomology, symbolic verification
of degeneration witnesses, non-degeneration certificates, and the resulting
orbit-closure diagrams and irreducible components.
"""

from .field import FieldElem, field_sqrt, parse_elem, format_elem
from .series import (PuiseuxSeries, NotInvertible, NoRoot,
                     InsufficientPrecision, Diverges, working_precision)
from .algebra import SuperAlgebra, AlgebraError
from . import (catalog, cohomology, exprlang, gamma23, invariants, linalg,
               orbitrel, series)

__version__ = "1.0.0"

__all__ = [
    "FieldElem", "field_sqrt", "parse_elem", "format_elem",
    "PuiseuxSeries", "NotInvertible", "NoRoot", "InsufficientPrecision",
    "Diverges", "working_precision",
    "SuperAlgebra", "AlgebraError",
    "catalog", "cohomology", "exprlang", "gamma23", "invariants", "linalg",
    "orbitrel", "series",
]
