"""Exact Verlinde (fusion) rings of compact simple Lie groups, the
character-ring presentation with its Verlinde ideal, the rho-shift
transport to the noncompact side, and SL(2) trace-fiber classifiers.

Weights are tuples of Dynkin labels; the core is exact integer/rational
arithmetic, with floating point confined to the S-matrix and character
oracles.
"""

from .alcove import (
    AlcovePosition,
    FusionContext,
    affine_reduce,
    alcove_position,
    fusion_context,
    level_weights,
)
from .charring import char_value, ideal_member, iota_shriek
from .errors import (
    ContextMismatch,
    InvalidLevel,
    InvalidType,
    LevelBelowDualCoxeter,
    LevelOverflow,
    LevelZero,
    NonIntegralOracle,
    NotDominant,
    RankTooLarge,
    SingularPoint,
    VerlindeError,
)
from .fusion import (
    CharElement,
    FusionElement,
    charge_conjugate,
    element,
    frobenius_matrix,
    fuse,
    fuse_via_smatrix,
    horn_support,
    s_matrix,
    sigma,
    tensor_decompose,
    trace,
    unit,
    weight_multiplicities,
    weyl_dimension,
    zero,
)
from .noncompact import (
    NoncompactBasisElement,
    QHamiltonianGenerator,
    degree_parity,
    dirac_induce,
    make_generator,
    q_map,
    quantize_product,
    quotient_product,
    regular_level_weights,
)
from .rootsystem import (
    RootSystem,
    Weight,
    build_root_system,
    dominant_reduce,
    from_type_string,
    inner_product,
    is_dominant,
    level,
    signed_weyl_orbit,
    weyl_dominant,
)
from .steinberg import (
    FiberDescriptor,
    Stratum,
    classify_fiber_sl2c,
    classify_fiber_sl2r,
    cover_member_sl2r,
)

__version__ = "0.1.0"

__all__ = [
    "AlcovePosition",
    "CharElement",
    "ContextMismatch",
    "FiberDescriptor",
    "FusionContext",
    "FusionElement",
    "InvalidLevel",
    "InvalidType",
    "LevelBelowDualCoxeter",
    "LevelOverflow",
    "LevelZero",
    "NonIntegralOracle",
    "NoncompactBasisElement",
    "NotDominant",
    "QHamiltonianGenerator",
    "RankTooLarge",
    "RootSystem",
    "SingularPoint",
    "Stratum",
    "VerlindeError",
    "Weight",
    "affine_reduce",
    "alcove_position",
    "build_root_system",
    "char_value",
    "charge_conjugate",
    "classify_fiber_sl2c",
    "classify_fiber_sl2r",
    "cover_member_sl2r",
    "degree_parity",
    "dirac_induce",
    "dominant_reduce",
    "element",
    "frobenius_matrix",
    "from_type_string",
    "fuse",
    "fuse_via_smatrix",
    "fusion_context",
    "horn_support",
    "ideal_member",
    "inner_product",
    "iota_shriek",
    "is_dominant",
    "level",
    "level_weights",
    "make_generator",
    "q_map",
    "quantize_product",
    "quotient_product",
    "regular_level_weights",
    "s_matrix",
    "sigma",
    "signed_weyl_orbit",
    "tensor_decompose",
    "trace",
    "unit",
    "weight_multiplicities",
    "weyl_dominant",
    "weyl_dimension",
    "zero",
]
