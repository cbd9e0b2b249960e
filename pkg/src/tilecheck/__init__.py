"""Exact-arithmetic verification of translative tilings in 3-space.

Builds zonotopes and lattice Voronoi cells over the rationals, decides the
four-or-six belt criterion, classifies the five lattice-tile types,
verifies k-fold tiling multiplicity by exact sampling, and replays the
wheel arithmetic that rules out long belts for twofold tiles.
"""

from .belts import (
    Belt,
    Classification,
    CriterionResult,
    FedorovType,
    all_belts,
    belt_of_edge,
    classify_fedorov,
    project_along_edge,
    venkov_mcmullen,
)
from .geom import GeometryError, Plane, Rat, TileCheckError, Vec2, Vec3, rat, rat_str
from .harness import (
    CaseAnalysis,
    SuiteOptions,
    SuiteReport,
    WheelParams,
    belt_shift_interior_check,
    case_analysis,
    contradiction_check,
    feasible_wheel_params,
    verification_suite,
)
from .lattice import DVCell, Lattice3, dv_cell, lattice3, reduce_basis
from .planar import (
    KappaIdentity,
    PlanarMultiset,
    Polygon2m,
    WheelDecomposition,
    adjacent_wheels,
    edge_interior_count,
    interior_multiplicity,
    kappa_identity,
    planar_multiset,
    polygon2m,
    verify_k_fold_2d,
    verify_vertex_multiplicity,
    vertex_star,
)
from .polytope import (
    Location,
    Polytope3,
    facets_centrally_symmetric,
    is_centrally_symmetric,
    locate_point,
    polytope_from_raw,
    polytope_volume,
)
from .tiling import (
    MultiplicityReport,
    SampleSpec,
    TranslateMultiset,
    canonicalize_multiset,
    multiplicity_at,
    translate_multiset,
    verify_k_fold,
)
from .zonotope import FacetClass, build_zonotope, facet_classes, normalize_generators

__version__ = "0.1.0"
