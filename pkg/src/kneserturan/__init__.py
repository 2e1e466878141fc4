"""General Kneser hypergraphs of representations, with exact desk-scale solvers.

Construction: hypergraphs and multigraphs (hyperstruct), occurrence
enumeration (patterns), Kneser powers and the named families (kneser).
Quantities: independence, covering, and chromatic numbers (exactsolve),
generalized and alternating Turan numbers plus ordering certificates
(turanalt). The harness module recomputes the closed-form results, and
cli exposes everything as a command-line tool.
"""

from .errors import InvalidParameterError, KneserTuranError, SizeCapError, VerificationError
from .exactsolve import (
    UNBOUNDED,
    ChromaticReport,
    ColoringCertificate,
    augment_representation,
    chromatic_number_graph,
    chromatic_number_hypergraph,
    cover_coloring,
    covering_number,
    dsatur_coloring,
    independence_number,
    max_clique,
    validate_graph_coloring,
    validate_hypergraph_coloring,
)
from .harness import (
    MANIFEST,
    FactorWitness,
    GoldenCase,
    count_p2,
    find_triangle_factor,
    path_graph_coloring,
    run_golden_suite,
)
from .hyperstruct import (
    Hypergraph,
    LinearOrdering,
    RestrictionSpec,
    SignVector,
    add_isolated,
    alt_of_vector,
    apply_ordering,
    bits_of,
    build_multigraph,
    build_named_family,
    canonical_dumps,
    doubled,
    from_dimacs,
    induced_restriction,
    mask_of,
    strip_isolated,
    to_dimacs,
)
from .kneser import (
    KneserInstance,
    NamedKneser,
    build_named_kneser,
    kneser_of_family,
    kneser_power,
    verify_representation,
)
from .patterns import (
    PatternFamily,
    PatternOccurrence,
    are_isomorphic,
    enumerate_occurrences,
    family_of,
    find_isomorphism,
    occurrences_to_jsonl,
    pattern_hypergraph,
)
from .turanalt import (
    AltermaticCertificate,
    AlternatingColoring,
    TuranReport,
    alt_prime_sigma_level,
    alt_sigma_level,
    altermatic_certificate,
    ex_alt_min,
    ex_alt_sigma,
    interval_ordering,
    occurrence_masks,
    salt_sigma,
    turan_number,
    verify_certificate,
    verify_turan_report,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
