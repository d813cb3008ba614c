"""Finite relation algebra, preorder morphisms, representations, and the
lax 2-adjunction between them, with a law-checking harness and CLI."""

from .rel import (
    DEFAULT_POWERSET_CAP,
    CarrierMismatch,
    FinSet,
    FnMap,
    PowersetBundle,
    PowersetCapExceeded,
    Rel,
    compose,
    compose_maps,
    converse,
    empty,
    eq,
    finset,
    fn_eq_into_powerset,
    full,
    graph_lower,
    graph_upper,
    identity,
    identity_map,
    left_residual,
    leq,
    powerset,
    right_residual,
    singleton_map,
    subset_label,
    union,
)
from .structures import (
    CheckResult,
    InvalidStructure,
    Preorder,
    Prom,
    PromMorphism,
    Representation,
    RepMorphism,
    check_preorder,
    check_prom,
    check_prom_morphism,
    check_rep_morphism,
    check_representation,
    compose_prom_morphisms,
    compose_rep_morphisms,
    identity_prom_morphism,
    identity_rep_morphism,
    is_preorder,
    preorder_closure,
    repmor_leq,
)
from .functors import (
    direct_image,
    prom_to_rep,
    prommor_to_repmor,
    rep_to_prom,
    repmor_to_prommor,
    subset_order,
    theory_map,
)
from .adjunction import (
    TriangleRepResult,
    counit,
    counit_natural,
    lift,
    lower,
    map_to_rel,
    recover_by_membership,
    rel_to_map,
    triangle_prom,
    triangle_rep,
    unit,
    unit_natural,
)
from .exactness import (
    exactness_is_identity,
    is_exact,
    is_order_reflecting,
    reflection_is_identity,
)
from .harness import (
    CATALOG,
    LAW_IDS,
    ConfigError,
    SearchConfig,
    SearchSummary,
    Witness,
    check_law,
    gen_preorder,
    gen_prom,
    gen_prom_morphism,
    gen_rep_morphism,
    gen_representation,
    replay,
    search,
)
from .workspace import Workspace, WorkspaceError

__version__ = "0.1.0"
