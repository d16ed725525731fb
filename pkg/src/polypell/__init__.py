"""Polynomial Pell equations A^2 - D*B^2 = F over QQ and QQ(t), solved by
continued fractions of sqrt(D) in Laurent series and by divisor-class
computations on the hyperelliptic model of Y^2 = D."""

from .cfrac import (AlmostPellReport, CFracExpansion, CFracStep,
                    NonSolvabilityReport, PellReport, default_max_steps,
                    expand, prove_not_identically_solvable, solve_almost_pell,
                    solve_pell)
from .curve import (Cluster, Divisor, FinitePoint, HyperCurve, INF_MINUS,
                    INF_PLUS, InfPoint, PairCluster, involution,
                    involution_divisor)
from .bridge import (FactoredTarget, JacobianPellReport, PellPointsSetup,
                     RelationVector, SolutionWitness, build_points,
                     factor_target, reduce_common_roots, relation_to_solution,
                     solution_to_relation, solvable_exponents,
                     solve_almost_pell_via_jacobian)
from .fields import (QQ, QQ_T, QuadElem, QuadraticExtensionField, RatFunc,
                     RationalField, RationalFunctionField)
from .jacobian import (PrincipalityCertificate, is_principal, order_of_class,
                       relation_lattice)
from .laurent import LaurentSeries, sqrt_series
from .parsing import parse_poly, print_poly
from .poly import (UniPoly, discriminant, is_squarefree, poly_divmod,
                   poly_ext_gcd, poly_gcd, poly_sqrt, rational_roots,
                   resultant)
from .scanner import (Degenerate, Family, ScanEntry, ScanReport,
                      beta_pullback, rationals_of_height_up_to, scan,
                      specialize)

__all__ = [name for name in dir() if not name.startswith("_")]

__version__ = "0.1.0"
