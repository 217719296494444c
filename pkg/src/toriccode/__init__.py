"""Parameterized linear codes from clutters over finite fields.

The pipeline: a clutter on n vertices gives s edge monomials, whose
evaluation on the torus (K*)^n cuts out a set X of projective points.
Evaluating all degree-d forms on X yields the code C_X(d).  This package
computes the code parameters, the algebraic invariants of the vanishing
ideal I(X), and the complete-intersection classification of I(X).
"""

from .clutter import Clutter, ClutterError, IncidenceMatrix, incidence, load_clutter, parse_clutter, uniformity
from .errors import BudgetExceededError
from .eval_code import (
    LinearCode,
    Monomial,
    code,
    evaluation_matrix,
    h_vector,
    hilbert_function,
    monomials,
    regularity,
    singleton_bound,
)
from .finite_field import FieldElement, FiniteField, field_from_q, make_field
from .intlattice import (
    CiReport,
    ci_classify,
    multiplication_injective,
    phi_injective,
    rank_rational,
    smith_normal_form,
)
from .mindist import (
    DistanceResult,
    distance_report,
    min_distance_bruteforce,
    min_distance_isd,
    torus_distance,
)
from .toric_set import ToricSet, enumerate_X, equals_torus, profile, projective_torus
from .vanishing_ideal import (
    ReducedGB,
    binomial_in_IX,
    degree_complexity,
    hilbert_IA,
    interpolate_gb,
    standard_monomial_count,
    vanishing_defect,
    verify_gb_structure,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "CiReport",
    "Clutter",
    "ClutterError",
    "DistanceResult",
    "FieldElement",
    "FiniteField",
    "IncidenceMatrix",
    "LinearCode",
    "Monomial",
    "ReducedGB",
    "ToricSet",
    "binomial_in_IX",
    "ci_classify",
    "code",
    "degree_complexity",
    "distance_report",
    "enumerate_X",
    "equals_torus",
    "evaluation_matrix",
    "field_from_q",
    "h_vector",
    "hilbert_IA",
    "hilbert_function",
    "incidence",
    "interpolate_gb",
    "load_clutter",
    "make_field",
    "min_distance_bruteforce",
    "min_distance_isd",
    "monomials",
    "multiplication_injective",
    "parse_clutter",
    "phi_injective",
    "profile",
    "projective_torus",
    "rank_rational",
    "regularity",
    "singleton_bound",
    "smith_normal_form",
    "standard_monomial_count",
    "torus_distance",
    "uniformity",
    "vanishing_defect",
    "verify_gb_structure",
]
