"""Exact Kreck-Stolz invariants for five families of 2-connected 7-manifolds.

The package computes, in exact rational arithmetic, the classifying
invariants (s1, s2, s3 in Q/Z, the first Pontryagin class and the linking
form modulo |H^4|) for Eschenburg biquotients and for four families of
bundle total spaces, and decides diffeomorphism, homeomorphism and
homotopy equivalence from them.
"""

from __future__ import annotations

from .atlas_search import (
    AtlasIndex,
    IndexEntry,
    MatchRecord,
    ProfileKey,
    RowResult,
    TableReport,
    TableRow,
    TABLE_A,
    TABLE_B,
    build_index,
    circle_grid,
    eschenburg_descriptor,
    fixture_entries,
    match_all,
    profile_key,
    render_matches_text,
    render_matches_tsv,
    render_table_text,
    reproduce_table,
    sphere_grid,
)
from .bundle_families import (
    BundleSpec,
    Family,
    MnPair,
    choose_mn,
    describe_bundle_spec,
    natural_partner,
    parse_bundle_spec,
    profile,
    profile_circle,
    profile_sphere,
    profile_spin_circle,
    profile_spin_sphere,
    reverse_orientation,
)
from .classification import (
    ChenParams,
    EdiffeoProblem,
    EdiffeoSolution,
    HomotopyVerdict,
    Orientation,
    SphereCongruences,
    TorusReduction,
    chen_bundle,
    ediffeo_solve,
    einstein_congruence,
    ks_diffeomorphic,
    ks_homeomorphic,
    kruggel_homotopy,
    lk_diffeomorphic,
    lk_homeomorphic,
    sphere_congruence_classify,
    torus_reduction,
)
from .errors import (
    CongruenceFailure,
    DegenerateOrder,
    DivisibilityFailure,
    DomainError,
    InconsistentFixture,
    MismatchedOrder,
    MissingFixture,
    ModuliNotCoprime,
    NotCoprime,
    ParityFailure,
    ParseError,
    UnequalSums,
    WrongFamily,
)
from .eschenburg import (
    EschenburgFixture,
    EschenburgInvariants,
    EschenburgSpace,
    enumerate_positively_curved,
    fixture_profile,
    invariants,
    is_free,
    is_positively_curved,
    load_fixtures,
    normalize,
)
from .exact_arith import (
    Factorization,
    ResidueClass,
    crt_combine,
    factorize,
    inv_mod,
    mod_one,
    sqrt_mod,
)
from .profiles import (
    CohomologyType,
    InvariantProfile,
    Pi4,
    lk_compatible,
    negated_s_triple,
    pi4_compatible,
    reversed_profile,
    same_invariants,
)

__version__ = "0.1.0"

__all__ = [
    "AtlasIndex",
    "BundleSpec",
    "ChenParams",
    "CohomologyType",
    "CongruenceFailure",
    "DegenerateOrder",
    "DivisibilityFailure",
    "DomainError",
    "EdiffeoProblem",
    "EdiffeoSolution",
    "EschenburgFixture",
    "EschenburgInvariants",
    "EschenburgSpace",
    "Factorization",
    "Family",
    "HomotopyVerdict",
    "InconsistentFixture",
    "IndexEntry",
    "InvariantProfile",
    "MatchRecord",
    "MismatchedOrder",
    "MissingFixture",
    "MnPair",
    "ModuliNotCoprime",
    "NotCoprime",
    "Orientation",
    "ParityFailure",
    "ParseError",
    "Pi4",
    "ProfileKey",
    "ResidueClass",
    "RowResult",
    "SphereCongruences",
    "TABLE_A",
    "TABLE_B",
    "TableReport",
    "TableRow",
    "TorusReduction",
    "UnequalSums",
    "WrongFamily",
    "build_index",
    "chen_bundle",
    "choose_mn",
    "circle_grid",
    "crt_combine",
    "describe_bundle_spec",
    "ediffeo_solve",
    "einstein_congruence",
    "enumerate_positively_curved",
    "eschenburg_descriptor",
    "factorize",
    "fixture_entries",
    "fixture_profile",
    "inv_mod",
    "invariants",
    "is_free",
    "is_positively_curved",
    "ks_diffeomorphic",
    "ks_homeomorphic",
    "kruggel_homotopy",
    "lk_compatible",
    "lk_diffeomorphic",
    "lk_homeomorphic",
    "load_fixtures",
    "match_all",
    "mod_one",
    "natural_partner",
    "negated_s_triple",
    "normalize",
    "parse_bundle_spec",
    "pi4_compatible",
    "profile",
    "profile_circle",
    "profile_key",
    "profile_sphere",
    "profile_spin_circle",
    "profile_spin_sphere",
    "render_matches_text",
    "render_matches_tsv",
    "render_table_text",
    "reproduce_table",
    "reverse_orientation",
    "reversed_profile",
    "same_invariants",
    "sphere_congruence_classify",
    "sphere_grid",
    "sqrt_mod",
    "torus_reduction",
]
