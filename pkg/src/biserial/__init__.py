"""Exact tools for complete special biserial algebras.

The package is organised in layers: quiver presentations and their path
combinatorics (:mod:`biserial.presentation`), finite-dimensional truncations
with exact path arithmetic (:mod:`biserial.algebra`), strings, bands and
their modules (:mod:`biserial.strings`), the Euler lattice and polyhedral
cones (:mod:`biserial.lattice`), two-term silting complexes
(:mod:`biserial.silting`), the rigid/non-rigid decomposition of the g-vector
space (:mod:`biserial.regions`) and silting reduction
(:mod:`biserial.reduction`).  Everything is computed over the rationals —
no floats, no numerical tolerances.
"""

from biserial.presentation import (
    AlgebraPresentation,
    Arrow,
    BrauerGraph,
    LineCyclePair,
    MarkerSets,
    ParseError,
    Path,
    PresentationError,
    Quiver,
    brauer_algebra,
    brauer_tau_finite,
    emit_presentation,
    from_line_cycle_pair,
    gentle_subideal,
    is_gentle,
    marker_sets,
    parse_brauer_graph,
    parse_presentation,
    presentations_isomorphic,
    separated_quiver,
    separated_tau_finite,
    to_line_cycle_pair,
    truncate,
    validate_special_biserial,
)
from biserial.algebra import Algebra
from biserial.lattice import (
    ConeH,
    ConeUnion,
    K0Vector,
    Membership,
    cone_contains,
    cone_dim,
    cone_from_generators,
    cone_intersect,
    cone_is_zero,
    cone_rays,
    double_description,
    euler_pair,
    membership,
    wall_contains,
)
from biserial.strings import (
    BandWord,
    ModuleDescriptor,
    StringWord,
    Substring,
    ar_translate,
    band_module,
    canonical_subsets,
    dim_vector,
    enumerate_bands,
    enumerate_strings,
    hom_basis,
    hom_dim,
    is_band,
    is_brick,
    is_string,
    module_from_json,
    modules_isomorphic,
    pin_module,
    string_module,
    submodule_dim_vectors,
)
from biserial.silting import (
    ExchangeGraph,
    SiltingError,
    SiltingObject,
    TwoTermComplex,
    algebra_silting,
    bongartz_completion,
    complexes_isomorphic,
    exchange_explore,
    g_vector,
    h0,
    hm1_nu,
    hom_shift_dim,
    is_presilting,
    is_silting,
    min_proj_presentation,
    mutate,
    projective_complex,
    semibricks,
    shifted_algebra_silting,
    shifted_projective,
)

__version__ = "0.1.0"

__all__ = [
    "Algebra",
    "AlgebraPresentation",
    "Arrow",
    "BandWord",
    "BrauerGraph",
    "ConeH",
    "ConeUnion",
    "ExchangeGraph",
    "K0Vector",
    "LineCyclePair",
    "MarkerSets",
    "Membership",
    "ModuleDescriptor",
    "ParseError",
    "Path",
    "PresentationError",
    "Quiver",
    "SiltingError",
    "SiltingObject",
    "StringWord",
    "Substring",
    "TwoTermComplex",
    "algebra_silting",
    "ar_translate",
    "band_module",
    "bongartz_completion",
    "brauer_algebra",
    "brauer_tau_finite",
    "canonical_subsets",
    "cone_contains",
    "cone_dim",
    "cone_from_generators",
    "complexes_isomorphic",
    "cone_intersect",
    "cone_is_zero",
    "cone_rays",
    "dim_vector",
    "double_description",
    "emit_presentation",
    "euler_pair",
    "enumerate_bands",
    "enumerate_strings",
    "exchange_explore",
    "from_line_cycle_pair",
    "g_vector",
    "gentle_subideal",
    "h0",
    "hm1_nu",
    "hom_basis",
    "hom_dim",
    "hom_shift_dim",
    "is_band",
    "is_brick",
    "is_gentle",
    "is_presilting",
    "is_silting",
    "is_string",
    "marker_sets",
    "membership",
    "min_proj_presentation",
    "module_from_json",
    "modules_isomorphic",
    "mutate",
    "parse_brauer_graph",
    "parse_presentation",
    "pin_module",
    "presentations_isomorphic",
    "projective_complex",
    "semibricks",
    "separated_quiver",
    "separated_tau_finite",
    "shifted_algebra_silting",
    "shifted_projective",
    "string_module",
    "submodule_dim_vectors",
    "to_line_cycle_pair",
    "truncate",
    "validate_special_biserial",
    "wall_contains",
    "__version__",
]
