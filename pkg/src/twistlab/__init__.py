"""Exact engine for braid-monoid actions by spherical twists over ADE zigzag algebras."""

from .braid import (
    BraidWord,
    DynkinDiagram,
    LayeredWord,
    build_diagram,
    braid_class,
    canonical_form,
    diagram_from_name,
    equivalent,
    flatten,
    layer,
    left_divisible_by,
    neighbors,
    word,
)
from .fields import GF2, QQ, PrimeField, RationalField, field_from_name
from .zigzag import MorphBasisElement, MorphElement, ZigzagAlgebra, hom_basis
from .complexes import (
    ChainMap,
    ProjComplex,
    cone,
    cone_triangle,
    direct_sum,
    hom_complex,
    hom_dims,
    make_complex,
    minimize,
    profile,
    profile_key,
    profiles_equal,
    projective,
    shift,
    sum_of_projectives,
)
from .twists import (
    SphericalParameters,
    TwistMemo,
    TwoTermObject,
    TwoTermPrediction,
    is_left_proper,
    is_right_proper,
    reflect_minus,
    reflect_plus,
    twist,
    twist_inv,
    twist_inv_word,
    twist_word,
    two_term_of,
    two_term_reflect,
)
from .reconstruct import (
    NotTwistImage,
    SummandWitness,
    long_morphism_dim,
    long_morphism_witness,
    max_degree,
    min_degree,
    peel,
    recover_trace,
    recover_word,
    words_equal_via_category,
)
from .meshbraid import (
    BraidMove,
    CommuteMove,
    DecoratedSet,
    MeshError,
    apply_moves,
    braid_move,
    check_mesh_relations,
    chi_boundary,
    chi_of_layered,
    commute_move,
    find_left_divisor,
    mesh,
    tau,
    to_decorated,
    to_dot,
    word_of,
)

__version__ = "0.1.0"
