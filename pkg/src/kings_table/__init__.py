"""Seating couples around a table of 2n+1 seats at prescribed distances.

Exact search, the algebraic +-1 certificate for prime tables, the
composite-case obstruction, and a survey of Bacher's conjecture.
"""

__version__ = "0.1.0"

from .errors import DomainError, InconsistencyError, ResourceError
from .modring import (Residue, Sign, factorial_mod, fermat_sign, inverse_mod,
                      is_prime, pow_mod, wilson_check)
from .seating import (InfeasibilityWitness, Instance, OrbitDecomposition, Seating,
                      composite_counterexample, is_valid, occupied_seats,
                      orbit_decomposition, orbit_infeasibility_witness, reflect, rotate)
from .solver import (SearchOutcome, SolverConfig, Verdict, enumerate_all,
                     is_feasible, solve)
from .algebra import (DysonSpec, LaurentPoly, SparsePoly, build_king_poly,
                      build_vandermonde_fourth, coefficient,
                      dyson_closed_form, dyson_constant_term_bruteforce,
                      poly_mul, top_homogeneous_part, total_degree)
from .certificate import (Certificate, certify, cn_hypothesis_check,
                          cn_verify_small, cross_check_expansion)
from .explorer import (SurveyReport, find_conjecture_counterexample,
                       invertible_distance_multisets, survey)
