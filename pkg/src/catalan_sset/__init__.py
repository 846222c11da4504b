"""The Catalan simplicial set ℂ, nerves of monoidal posets, finite categories
and skew-monoidal structures, all computed exactly by enumeration."""

from .catalan import (
    MonoidalPoset,
    build_catalan_direct,
    build_nerve_monoidal_poset,
    catalan_counts,
    two_poset,
)
from .classify import (
    CatMapData,
    LaxMonoid,
    cat_map_to_skewmon,
    enumerate_lax_monoids,
    forced_k,
    lax_monoid_to_map,
    map_to_lax_monoid,
    skewmon_to_cat_map,
    validate_cat_map_data,
)
from .fincat import FinCategory, FinFunctor, FinNatTrans, product
from .simplicial import (
    Boundary,
    SimplicialMap,
    TruncatedSimplicialSet,
    boundary_of,
    check_simplicial_map,
    compatible_boundaries,
    coskeletal_extend,
    enumerate_maps,
    find_isomorphism,
    is_degenerate,
    validate,
)
from .skewmon import (
    SkewMonoidalStructure,
    check_lax_morphism,
    check_monoidal_transformation,
    check_skew_axioms,
    compose_lax_morphisms,
    enumerate_skew_structures,
    kelly_property,
)

__version__ = "0.1.0"
