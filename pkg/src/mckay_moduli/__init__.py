"""Exact toric geometry of moduli of quiver representations for finite abelian groups.

The pipeline: present a finite abelian group with its coordinate weights,
build the quiver of characters, route a stability parameter through it to get
the type polyhedron, and read the moduli space's toric fan and distinguished
representations off that polyhedron with exact rational arithmetic throughout.
"""

from .errors import (
    BadShape,
    BadTheta,
    GroupSpecError,
    MismatchedDescriptions,
    ModuliError,
    NegativeW,
    NonGenerating,
    NotInM,
    NotOptimal,
    OutsideSupport,
    TrivialGroup,
)
from .groups import (
    AbelianGroupData,
    Arrow,
    Character,
    IncidenceData,
    McKayQuiver,
    PathVector,
    binomial_pairs,
    build_group,
    build_quiver,
    closed_walk_from_kernel,
    cycle_from_type,
    directed_path,
    incidence_matrices,
    kernel_generators_cij,
    minimal_exponents,
    theta_decompose,
)
from .lp import (
    LinearProgram,
    LpInfeasible,
    LpOptimal,
    LpUnbounded,
    optimal_face_tight_set,
    simplex_standard,
    solve,
)
from .moduli import (
    ChartReport,
    DistinguishedRep,
    DualSlice,
    GitParameter,
    ThetaFan,
    ThetaPolyhedron,
    distinguished_rep,
    dual_slice,
    ghilb_parameter,
    lifted_flow_polyhedron,
    min_total_flow,
    moduli_fan,
    stability_parameter,
    theta_polyhedron,
)
from .polyhedra import (
    Cone,
    Fan,
    HPolyhedron,
    VPolyhedron,
    h_to_v,
    locate_cone,
    normal_fan,
    project,
    v_to_h,
    vertex_facet_incidence,
)

__all__ = [
    "AbelianGroupData",
    "Arrow",
    "BadShape",
    "BadTheta",
    "Character",
    "ChartReport",
    "Cone",
    "DistinguishedRep",
    "DualSlice",
    "Fan",
    "GitParameter",
    "GroupSpecError",
    "HPolyhedron",
    "IncidenceData",
    "LinearProgram",
    "LpInfeasible",
    "LpOptimal",
    "LpUnbounded",
    "McKayQuiver",
    "MismatchedDescriptions",
    "ModuliError",
    "NegativeW",
    "NonGenerating",
    "NotInM",
    "NotOptimal",
    "OutsideSupport",
    "PathVector",
    "ThetaFan",
    "ThetaPolyhedron",
    "TrivialGroup",
    "VPolyhedron",
    "binomial_pairs",
    "build_group",
    "build_quiver",
    "closed_walk_from_kernel",
    "cycle_from_type",
    "directed_path",
    "distinguished_rep",
    "dual_slice",
    "ghilb_parameter",
    "h_to_v",
    "incidence_matrices",
    "kernel_generators_cij",
    "lifted_flow_polyhedron",
    "locate_cone",
    "min_total_flow",
    "minimal_exponents",
    "moduli_fan",
    "normal_fan",
    "optimal_face_tight_set",
    "project",
    "simplex_standard",
    "solve",
    "stability_parameter",
    "theta_decompose",
    "theta_polyhedron",
    "v_to_h",
    "vertex_facet_incidence",
]

__version__ = "0.1.0"
