"""Lens spaces, Hopf-link covering matrices, cyclic quotients and Hirzebruch-Jung chains."""
from .curves import L2, M2, TorusCurve, intersection
from .errors import (
    BoundTooLarge,
    BoundTooSmall,
    Degenerate,
    InvalidDegree,
    InvalidInput,
    LensforgeError,
    MalformedMatrix,
    NonManifoldInput,
    NonPrimitiveCurve,
    NotApplicable,
    NotInvertible,
    ParseError,
)
from .hj import HJChain, ResolutionGraph, hj_evaluate, hj_expand, hj_reverse_dual, resolution_graph
from .lens import S1_X_S2, S3, LensSpace, dehn_fill, is_homeomorphic, mod_inverse, normalize_lens
from .quotient import (
    ExactPoint,
    ExactScalar,
    MonomialExponent,
    QuotientGerm,
    SemigroupBasis,
    act,
    chain_identity_check,
    eval_monomial,
    hilbert_basis,
    is_invariant,
    normal_model,
    nu_components,
    nu_orbit_invariance,
    nu_separates_orbits,
    orbit_size_census,
)
from .torus_cover import (
    CoveringData,
    CoveringMatrix,
    HopfModel,
    covering_equivalent,
    covering_matrix,
    decompose_matrix,
    generic_degree,
    is_normal_X,
    link_of_X,
    smooth_discriminant_model,
    swap_coordinates,
    trace_link_of_X,
)

__version__ = "0.1.0"
