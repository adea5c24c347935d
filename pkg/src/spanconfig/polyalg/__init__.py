from .demazure import demazure
from .groebner import (
    GroebnerBasis,
    buchberger,
    claimed_groebner,
    groebner_basis,
    is_groebner,
    normal_form,
    standard_monomials,
    verify_claimed_groebner,
)
from .hilbert import hilbert_series, invariant_hilbert, quotient_standard_monomials
from .locus import PointLocus, inhomogeneous_relations, point_locus, point_of, vanishing_checks
from .poly import LengthMismatch, Poly, divides, neglex_key, neglex_less
from .symmetric import (
    IdealSpec,
    complete_homog,
    divided_difference,
    elementary,
    ideal_generators,
    isobaric,
)
