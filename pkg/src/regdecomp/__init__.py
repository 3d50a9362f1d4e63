"""regdecomp: exact computation with regular decompositions of
group-graded algebras over finite fields of odd characteristic.

The toolkit builds finite fields GF(p^k), finite abelian groups and
their quotients, bicharacters and 2-cocycles, twisted group algebras,
decomposition matrices with exact determinants, and normal forms in the
relatively free graded algebra.  Scenario runners (see the `regdecomp`
CLI) reproduce the constructions around the conjecture that a regular
decomposition is minimal exactly when its decomposition matrix is
invertible, and certify what actually holds.
"""

from .bichar import (
    Bicharacter,
    character_sum,
    grassmann_bicharacter,
    is_minimal,
    quotient_bicharacter,
    radical,
    sign_root_bicharacter,
    trivial_bicharacter,
    znxzn_bicharacter,
)
from .cocycle import (
    Cocycle2,
    CocycleError,
    carry_cocycle,
    cocycle_from_alternating,
    induced_bicharacter,
    pcube_cocycle,
    sign_cocycle,
)
from .ff import FieldElement, FieldSpec, make_field, root_of_unity
from .freealg import GradedLetter, GradedPoly, GradedWord, normalize, parse_word, regularity_witness
from .groups import FinAbGroup, GroupElement, QuotientPresentation, Subgroup, quotient
from .matrices import (
    DecompMatrix,
    SquareMatrix,
    d_matrix,
    pauli_generators,
    square_identity,
    vandermonde,
)
from .twisted import AlgebraElement, TwistedGroupAlgebra

__version__ = "0.1.0"

__all__ = [
    "AlgebraElement",
    "Bicharacter",
    "Cocycle2",
    "CocycleError",
    "DecompMatrix",
    "FieldElement",
    "FieldSpec",
    "FinAbGroup",
    "GradedLetter",
    "GradedPoly",
    "GradedWord",
    "GroupElement",
    "QuotientPresentation",
    "SquareMatrix",
    "Subgroup",
    "TwistedGroupAlgebra",
    "carry_cocycle",
    "character_sum",
    "cocycle_from_alternating",
    "d_matrix",
    "grassmann_bicharacter",
    "induced_bicharacter",
    "is_minimal",
    "make_field",
    "normalize",
    "parse_word",
    "pauli_generators",
    "pcube_cocycle",
    "quotient",
    "quotient_bicharacter",
    "radical",
    "regularity_witness",
    "root_of_unity",
    "sign_cocycle",
    "sign_root_bicharacter",
    "square_identity",
    "trivial_bicharacter",
    "vandermonde",
    "znxzn_bicharacter",
]
