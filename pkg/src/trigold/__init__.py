"""trigold: exact chromatic polynomials of planar triangulations at the golden point.

Exact arithmetic in Q(sqrt5), a memoized deletion-contraction engine with
brute-force oracles, recursive triangulation families, certified chromatic
zeros, Tutte-bound ratios, and Potts ground-state entropy.
"""

from .errors import (
    AllCoefficientsVanish,
    DegreeMismatch,
    DivideByZero,
    DivisionNotExact,
    EdgeNotFlippable,
    EdgeNotPresent,
    FaceNotPresent,
    FlipWouldCreateParallelEdge,
    InvalidParameter,
    NoConvergence,
    NotATriangle,
    OutOfRange,
    ParseError,
    ResourceLimit,
    TooLarge,
    TrigoldError,
    UnsupportedFamily,
)
from .exactmath import (
    GOLDEN_POINT,
    TAU,
    GoldenValue,
    IntPoly,
    golden_sign,
    golden_to_float,
    poly_eval_golden,
    tau_power,
)
from .graphs import (
    FaceCertificate,
    Graph,
    apollonian_insert,
    build_standard,
    complete_graph,
    contract_edge,
    cycle_graph,
    delete_edge,
    diagonal_flip,
    empty_graph,
    glue_on_face,
    glue_on_triangle,
    graph_join,
    path_graph,
    validate_triangulation,
)
from .chromatic import (
    MemoCache,
    chromatic_brute,
    chromatic_glue,
    chromatic_poly,
    complete_poly,
    cycle_poly,
)
from .families import (
    ChromaticForm,
    FamilySpec,
    family_form,
    family_graph,
    family_n,
    family_poly,
    form_expand,
    icosahedron,
)
from .roots import (
    AlgebraicNumber,
    Q_M,
    RHO_TC,
    RootReport,
    all_roots,
    interval_checks,
    real_roots,
)
from .golden import (
    AsymptoticReport,
    BerahaNumber,
    EntropyReport,
    GridSpec,
    LocusScan,
    RatioReport,
    asymptotic_constant,
    b_locus_scan,
    beraha,
    cm_ratio_base,
    empirical_w,
    family_asymptotic_constant,
    family_entropy,
    paper_ratio_formula,
    ratio_formula_check,
    tutte_bound,
    tutte_ratio,
)

__version__ = "0.1.0"
