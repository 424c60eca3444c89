"""inclab: exact machinery for incidence bounds.

The toolkit computes the exact exponents of general point/flat incidence
upper bounds, generates the matching lower-bound constructions with
verified forbidden-subgraph parameters, counts incidences exactly, and
compares measured incidence growth against the predicted exponents.
"""

from .errors import (
    DegenerateRandomness,
    DegenerateSystem,
    InvalidInput,
    InvariantViolation,
    ResourceLimit,
    SizeShortfall,
    SweepFailed,
)
from .geometry import (
    ComplexHyperplane,
    ComplexRational,
    Flat,
    IntVector,
    RatPoint,
    contains,
    embed_complex_hyperplane,
    embed_complex_point,
    find_collinear_triple,
    flats_equal,
    generic_extension,
    intersect,
    is_primitive,
    make_hyperplane,
)
from .incidence import (
    BoundValue,
    IncidenceInstance,
    KstWitness,
    count_incidences,
    find_kst,
    incidence_masks,
    kst_bound_value,
)
from .exponents import (
    BoundTerm,
    DimensionChain,
    DimPair,
    DominanceReport,
    LeadingTerm,
    enumerate_chains,
    leading_exponents,
    leading_term,
    low_ratio_pairs,
    problematic_pairs,
    ratio_dominates,
    term_from_chain,
    term_from_system,
)
from .constructions import (
    ConstructionConfig,
    ConstructionOutput,
    NormalSelection,
    VerificationReport,
    build_grid_construction,
    build_sphere_construction,
    embed_configuration,
    embedding_carrier,
    lattice_points,
    measure_max_coverage,
    predicted_lower_bound_exponents,
    primitive_vectors,
    select_admissible_normals,
    verify_construction,
)
from .experiments import SweepSpec, fit_power_law, run_sweep
from .serialization import (
    load_construction,
    load_instance,
    save_construction,
    save_instance,
)

__version__ = "0.1.0"

__all__ = [
    "BoundTerm",
    "BoundValue",
    "ComplexHyperplane",
    "ComplexRational",
    "ConstructionConfig",
    "ConstructionOutput",
    "DegenerateRandomness",
    "DegenerateSystem",
    "DimPair",
    "DimensionChain",
    "DominanceReport",
    "Flat",
    "IncidenceInstance",
    "IntVector",
    "InvalidInput",
    "InvariantViolation",
    "KstWitness",
    "LeadingTerm",
    "NormalSelection",
    "RatPoint",
    "ResourceLimit",
    "SizeShortfall",
    "SweepFailed",
    "SweepSpec",
    "VerificationReport",
    "build_grid_construction",
    "build_sphere_construction",
    "contains",
    "count_incidences",
    "embed_complex_hyperplane",
    "embed_complex_point",
    "embed_configuration",
    "embedding_carrier",
    "enumerate_chains",
    "find_collinear_triple",
    "find_kst",
    "fit_power_law",
    "flats_equal",
    "generic_extension",
    "incidence_masks",
    "intersect",
    "is_primitive",
    "kst_bound_value",
    "lattice_points",
    "leading_exponents",
    "leading_term",
    "load_construction",
    "load_instance",
    "low_ratio_pairs",
    "make_hyperplane",
    "measure_max_coverage",
    "predicted_lower_bound_exponents",
    "primitive_vectors",
    "problematic_pairs",
    "ratio_dominates",
    "run_sweep",
    "save_construction",
    "save_instance",
    "select_admissible_normals",
    "term_from_chain",
    "term_from_system",
    "verify_construction",
]
