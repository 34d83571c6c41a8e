"""Exact arithmetic over GF(2^k): elements, polynomials, additive maps, colength."""

from .field import (F2, MAX_DEGREE, FieldElement, FieldError, FieldSpec, embed,
                    embedding, extension_degrees, ff_arith, is_irreducible)
from .groebner import (INFINITE, groebner_basis, ideal_colength, normal_form,
                       standard_monomials, tjurina_number)
from .multipoly import MultiPoly, derivation, grlex_key
from .poly import (UniPoly, additive_solve, distinct_root_count, is_separable,
                   poly_gcd, radical, roots)

__all__ = [
    "F2", "MAX_DEGREE", "FieldElement", "FieldError", "FieldSpec", "embed", "embedding",
    "extension_degrees", "ff_arith", "is_irreducible", "INFINITE", "groebner_basis",
    "ideal_colength", "normal_form", "standard_monomials", "tjurina_number", "MultiPoly",
    "derivation", "grlex_key", "UniPoly", "additive_solve", "distinct_root_count",
    "is_separable", "poly_gcd", "radical", "roots",
]
