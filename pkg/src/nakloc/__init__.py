"""nakloc: exact classification machinery for Nakayama algebras.

Universal localisations up to epiclasses, their bijections with orthogonal
collections, wide subcategories, torsion classes and support tau-tilting
modules, non-crossing arc diagrams for the uniform families, and an
independent linear-algebra oracle.  All computations are exact and
deterministic; all values are immutable and safe to share across threads.
"""
from .algebra import (
    Component,
    Indec,
    InvalidKupisch,
    NakayamaAlgebra,
    build_cycle,
    build_line,
    from_kupisch,
    list_indecomposables,
    module_label,
    parse_algebra,
    parse_modules,
    quotient_by_vertices,
)
from .arcs import (
    ArcDiagram,
    NotUniformFamily,
    count_noncrossing,
    enumerate_arc_diagrams,
    from_arc_diagram,
    to_arc_diagram,
)
from .localise import (
    InvalidMap,
    Localisation,
    NotAnnihilating,
    NotSelfInjective,
    PropertyViolation,
    StructureViolation,
    canonicalise,
    chains,
    classify_homological_selfinjective,
    compose_with_quotient,
    enumerate_uniloc,
    hasse_uniloc,
    is_homological,
    map_to_modules,
    module_of_localisation,
    phi,
    phi_inverse,
    predicates,
    w_tilde,
)
from .modcat import (
    ProjectiveHasNoTau,
    ProjPresentation,
    comp_factor_mult,
    ext_dim,
    extension_middles,
    gen_closure,
    hom_dim,
    hom_positions,
    proj_dim,
    proj_presentation,
    quotients,
    submodules,
    syzygy,
    tau,
)
from .subcats import (
    NotTorsion,
    NotWide,
    alpha,
    beta,
    enumerate_orth_collections,
    enumerate_torsion_classes,
    enumerate_wide,
    ext_projectives,
    is_orthogonal_collection,
    is_torsion_class,
    is_wide,
    lower_star,
    sigma_star,
    simples_of_wide,
    split_projectives,
    wide_from_collection,
)
from .tautilt import (
    SupportTauTilting,
    enumerate_stt,
    hasse_stt,
    is_tau_rigid,
    is_tilting_classical,
    psi,
    psi_inverse,
    sigma_prime,
    stt_from_torsion,
    torsion_from_stt,
)

__version__ = "0.1.0"
