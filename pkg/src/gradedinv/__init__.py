"""Exact-arithmetic graded invariants of algebras over Q and F_p."""

__version__ = "0.1.0"

from .core import (
    GF,
    QQ,
    DEGREVLEX,
    LEX,
    FieldSpec,
    GradedPolyRing,
    GradedQuotientPresentation,
    MonomialOrder,
    Polynomial,
    elimination_order,
    free_presentation,
)
from .groebner import (
    GradedRingMap,
    GroebnerBasis,
    contraction,
    elimination_ideal,
    groebner_basis,
    ideal_membership,
    ideal_quotient,
    ideal_quotient_ideal,
    ideals_equal,
    intersection,
    normal_form,
    ring_map_kernel,
    saturation,
)
from .hilbert import (
    HilbertSeries,
    a_invariant_fastpath,
    h_vector,
    hilbert_series,
    krull_dimension,
    multiplicity,
)
from .resolution import (
    BettiTable,
    a_invariant,
    betti_table,
    canonical_module,
    depth,
    embedding_dimension,
    is_cohen_macaulay,
    is_r1,
    minimal_free_resolution,
    projective_dimension,
    regularity,
    singular_locus_dimension,
)
from .constructions import (
    frobenius_power_presentation,
    irrelevant_saturation,
    is_module_finite,
    subalgebra_membership,
    subalgebras_equal,
    veronese_presentation,
)
from .toric import (
    ExponentLattice,
    extension_index,
    inseparable_degree,
    lattice_of_monomial_algebra,
)
from .theorems import (
    ExtensionInstance,
    InvariantReport,
    TheoremVerdict,
    invariant_report,
    pinchpoint_family,
    run_suite,
)
