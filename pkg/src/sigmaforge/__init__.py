"""sigma-forge: exact Bieri-Strebel sigma-complements via tropical corner
loci, Newton-Puiseux homothety rigidity, and the non-self-similarity report
for metabelian groups (ZQ/(f)) x| Z^s."""

from .laurent import (
    CoefficientValuation,
    LaurentPolynomial,
    ResiduePolynomial,
    ValuationKind,
    ZeroIdeal,
    content,
    padic_valuation,
    reduce_mod_p,
    resultant_univariate,
)
from .polyhedra import (
    LatticePolytope,
    LiftedSubdivision,
    minkowski_summand_pairs,
    minkowski_sum,
    newton_polytope,
    regular_subdivision,
)
from .sigma import (
    Character,
    SigmaReport,
    SphericalSet,
    TropicalComplex,
    boundary_points,
    corner_locus,
    direction_membership,
    exceptional_primes,
    membership,
    residue_branches,
    sigma_complement,
    sphere_diagnostics,
    two_tame,
)
from .rings import (
    IrreducibilityStatus,
    MonomialDirectionSet,
    algebraic_monomial_directions,
    all_primes_certificate,
    factor_mod_p,
    irreducibility_status,
    krull_dimension_verdict,
    mod_p_domain_check,
    torsionfree_check,
)
from .puiseux import (
    FractionalSeries,
    PuiseuxBranch,
    find_integer_relation,
    homothety_check,
    homothety_scan,
    puiseux_expand,
    series_power_twist,
)
from .report import HypothesisReport, run_report
from .cli import parse_poly

__version__ = "0.1.0"
