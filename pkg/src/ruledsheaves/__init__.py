"""Exact intersection theory and Chern-data bookkeeping on birationally ruled surfaces."""

from .errors import (
    AuditFailure,
    ConfigError,
    DimensionMismatchError,
    HypothesisError,
    IntegralityError,
    NoBlowdownError,
    NormalizationError,
    RuledSheavesError,
    UnsupportedSurfaceError,
    WindowError,
)
from .invariants import (
    ChernData,
    chern_of_twist,
    direct_sum,
    discriminant,
    euler_char,
    euler_pairing,
    line_bundle,
    pullback_from_curve,
    slope,
    stack_dim,
)
from .lattice import (
    DivisorClass,
    RuledSurface,
    blow_up,
    canonical_class,
    fiber_class,
    intersect,
    make_geometrically_ruled,
    pullback_class,
    pushforward_class,
)
from .polarization import Verdict, construct_good_polarization, is_ample, theorem_condition
from .reduction import (
    audit_dimensions,
    base_case_data,
    blowdown_step,
    moduli_dims,
    normalize_twist,
    run_reduction,
    semistable_prioritary_gap,
)
from .strata import SplittingType, enumerate_splitting_types, stratum_codim, verify_lemma_p1

__version__ = "0.1.0"
