"""Brute-force module-category engine over exact rationals."""

from .algebra import (
    QuiverPresentation,
    StructureConstantAlgebra,
    build_replicated,
    compile_bound_quiver,
    dual_numbers_presentation,
    gorenstein_non_formal_presentation,
    idempotent_truncation,
    kronecker_presentation,
    kupisch_presentation,
    linear_an_presentation,
    parse_presentation,
    quiver_presentation_from_dynkin,
    tnl_presentation,
)
from .homology import (
    Coresolution,
    GateReport,
    HomologicalReport,
    Resolution,
    SerreVerdict,
    codomdim_of_dual_regular,
    ext_against_regular,
    hom_vanishing_gate,
    homological_report,
    injective_coresolution,
    inverse_nakayama,
    kupisch_of,
    minimal_projective_resolution,
    module_dims,
    nakayama_functor,
    nu_inverse_derived,
    serre_formal_check,
    serre_orbit_profile,
    tits_positive_roots,
)
from .modules import (
    ModuleComplex,
    ModuleMap,
    RightModule,
    da_module,
    direct_sum,
    dual_module,
    hom_space,
    injective_module,
    projective_module,
    quotient_module,
    regular_module,
    simple_module,
    socle_data,
    submodule,
    top_data,
)
