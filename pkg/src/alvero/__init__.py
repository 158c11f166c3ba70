"""alvero: exact verification toolkit for the Casas-Alvero resultant family.

Exact layer: sparse multivariate polynomials over Q, Hasse derivatives,
Sylvester resultants, Buchberger bases, ideal/radical membership.
Numeric layer: root profiles, interlacing checks, and a seeded search for
almost-counterexample polynomials.
"""

from .budget import Budget, BudgetExceeded, DEFAULT_BUDGET
from .polycore import (
    MultiPoly,
    UniPoly,
    exact_divide,
    generic_casas_polynomial,
    hasse_derivative,
)
from .resultants import (
    ResultantFamily,
    SylvesterMatrix,
    casas_resultants,
    det_bareiss,
    det_cofactor,
    resultant,
    sylvester_matrix,
)
from .textform import (
    PolyParseError,
    format_multipoly,
    format_unipoly,
    parse_multipoly,
    parse_unipoly,
)

__version__ = "0.1.0"

__all__ = [
    "Budget",
    "BudgetExceeded",
    "DEFAULT_BUDGET",
    "MultiPoly",
    "UniPoly",
    "exact_divide",
    "generic_casas_polynomial",
    "hasse_derivative",
    "ResultantFamily",
    "SylvesterMatrix",
    "casas_resultants",
    "det_bareiss",
    "det_cofactor",
    "resultant",
    "sylvester_matrix",
    "PolyParseError",
    "format_multipoly",
    "format_unipoly",
    "parse_multipoly",
    "parse_unipoly",
    "__version__",
]
