"""Exact multisegment calculus for twist-compatible matrix pairs.

The package computes with pairs (invertible P, nilpotent N) over the
rationals or a prime field, translates them into multisegments on free and
cyclic labelled lines, compares multisegments in the combinatorial partial
order, and reduces everything mod p to decide when a reduction stays as
generic as its source.  A small rank-2 lookup table and a crude length
bound round out the public surface; service.py and cli.py expose the same
operations over JSON.
"""

from .errors import (
    CyclicLineError,
    DomainError,
    FieldMismatchError,
    InternalInvariantError,
    NonSplitError,
    NotNilpotentError,
    NotPIntegralError,
    NotUnipotentError,
    SearchBoundError,
    SingularError,
    TwistRelationError,
    WildCharacteristicError,
    WraparoundError,
)
from .exact import (
    Field,
    Fp,
    Matrix,
    Polynomial,
    PrimeField,
    QQ,
    Rationals,
    is_semisimple,
    jordan_chevalley,
    nilpotent_exp,
    nilpotent_log,
    reduce_mod_p,
)
from .weildeligne import (
    GaloisSample,
    RankProfile,
    WeilDeligneRep,
    direct_sum,
    frobenius_semisimplify,
    from_galois_sample,
    is_minimal_lift,
    rank_profile,
    reduce_wd,
    special_rep,
)
from .multiseg import (
    GradedNilpotentPair,
    Multisegment,
    Segment,
    TwistedMultisegment,
    cycle_line_id,
    down_set,
    elementary_operation,
    generic_from_support,
    graded_pair,
    is_primitive,
    leq,
    leq_bruteforce,
    linked,
    multisegment_to_wd,
    order_multisegment,
    precedes,
    supercuspidal_support,
    twist,
    wd_to_multisegment,
    window_count,
)
from .specialize import (
    SpecializationReport,
    breuil_schneider,
    reduce_segments,
    specialize,
)
from .gl2 import (
    Gl2ModpInput,
    Gl2ModpOutput,
    Gl2Regime,
    Gl2Shape,
    classify_regime,
    gl2_modp_table,
    length_bound,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # errors
    "DomainError",
    "InternalInvariantError",
    "FieldMismatchError",
    "SingularError",
    "NotNilpotentError",
    "NotUnipotentError",
    "TwistRelationError",
    "NotPIntegralError",
    "WildCharacteristicError",
    "NonSplitError",
    "CyclicLineError",
    "WraparoundError",
    "SearchBoundError",
    # exact linear algebra
    "Field",
    "Rationals",
    "QQ",
    "PrimeField",
    "Fp",
    "Matrix",
    "Polynomial",
    "jordan_chevalley",
    "is_semisimple",
    "nilpotent_log",
    "nilpotent_exp",
    "reduce_mod_p",
    # twist-compatible pairs
    "WeilDeligneRep",
    "GaloisSample",
    "RankProfile",
    "from_galois_sample",
    "special_rep",
    "direct_sum",
    "frobenius_semisimplify",
    "reduce_wd",
    "rank_profile",
    "is_minimal_lift",
    # multisegments
    "Segment",
    "Multisegment",
    "TwistedMultisegment",
    "GradedNilpotentPair",
    "cycle_line_id",
    "twist",
    "linked",
    "precedes",
    "order_multisegment",
    "elementary_operation",
    "window_count",
    "supercuspidal_support",
    "leq",
    "leq_bruteforce",
    "down_set",
    "is_primitive",
    "generic_from_support",
    "graded_pair",
    "wd_to_multisegment",
    "multisegment_to_wd",
    # specialization
    "SpecializationReport",
    "breuil_schneider",
    "reduce_segments",
    "specialize",
    # rank-2 table and bound
    "Gl2Regime",
    "Gl2Shape",
    "Gl2ModpInput",
    "Gl2ModpOutput",
    "classify_regime",
    "gl2_modp_table",
    "length_bound",
]
