"""Exact-arithmetic verification of the 3-dimensional left-symmetric
algebra classification catalog.

The package represents finite-dimensional left-symmetric (pre-Lie)
algebras by structure constants over exact scalar domains, implements the
bijective-1-cocycle correspondence with sub-adjacent Lie algebras, the
standard subclass predicates, and mechanically re-verifies the embedded
classification catalog (families H, N, D1, Dl, E) including property
tables and witness isomorphisms.

All values are immutable and all operations are pure functions, so
everything here is safe to use from multiple threads.
"""

from .algebra import (Algebra, associator, check_left_regular,
                      check_left_symmetric, commutator_lie, left_matrix,
                      multiply, rebase, right_matrix)
from .cocycle import (Cocycle, Representation, check_cocycle,
                      check_representation, is_bijective, phi, psi,
                      verify_cocycle_equiv, verify_cocycle_iso)
from .constructions import (check_cybe, check_o_operator, induced_products,
                            lsa_from_rmatrix, novikov_from_derivation)
from .iso import IsoVerdict, search_lsa_iso, verify_lsa_iso
from .lie import LieAlgebra, LieClass, canonical_lie, check_lie_automorphism, classify3, killing_form
from .props import (Fingerprint, find_ideals, fingerprint, is_associative,
                    is_bisymmetric, is_novikov, is_semisimple, is_simple,
                    is_transitive)
from .scalars import (ExtField, ExtScalar, MultiPoly, QI, RatFunc,
                      factor_low_degree, field_arith, parse_scalar,
                      substitute)

__version__ = "0.1.0"

__all__ = [
    "Algebra", "Cocycle", "ExtField", "ExtScalar", "Fingerprint",
    "IsoVerdict", "LieAlgebra", "LieClass", "MultiPoly", "QI", "RatFunc",
    "Representation", "associator", "canonical_lie", "check_cocycle",
    "check_cybe", "check_left_regular", "check_left_symmetric",
    "check_lie_automorphism", "check_o_operator", "check_representation",
    "classify3", "commutator_lie", "factor_low_degree", "field_arith",
    "find_ideals", "fingerprint", "induced_products", "is_associative",
    "is_bijective", "is_bisymmetric", "is_novikov", "is_semisimple",
    "is_simple", "is_transitive", "killing_form", "left_matrix",
    "lsa_from_rmatrix", "multiply", "novikov_from_derivation",
    "parse_scalar", "phi", "psi", "rebase", "right_matrix",
    "search_lsa_iso", "substitute", "verify_cocycle_equiv",
    "verify_cocycle_iso", "verify_lsa_iso",
]
