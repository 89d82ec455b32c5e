"""Sticky-sphere lattice models: surface energy densities, Wulff crystals,
and discrete ground states on fcc and hcp.

The library computes, from the lattice geometry alone, the homogenized
surface energy density phi of the interface model, its polar function,
the Wulff shape with its isoperimetric constant, and searches discrete
N-atom ground states to exhibit their convergence to the Wulff shape.
"""

from .convex import (
    Facet,
    Halfspace,
    Polytope,
    UnboundedRegionError,
    convex_hull,
    intersect_halfspaces,
    minkowski_sum,
    minkowski_sum_of,
    polar,
    segment,
    support,
    to_obj,
    to_off,
)
from .crystallize import (
    AnnealResult,
    AnnealSchedule,
    ScalingRow,
    ShapeDeviation,
    anneal_ground_state,
    exact_ground_state,
    excess_energy_limit,
    nucleation_center,
    scaling_curve,
    shape_deviation,
    wulff_configuration,
)
from .discrete import (
    Configuration,
    EmpiricalMeasure,
    VoronoiUnion,
    ball_configuration,
    bond_count,
    boundary_faces,
    cut_energy,
    cut_energy_interior,
    empirical_measure,
    energy,
    excess_energy,
    halfspace_configuration,
    voronoi_union,
)
from .lattice import (
    AdmissibilityConstants,
    AllSpace,
    Ball,
    Box,
    LatticeSpec,
    Region,
    RotatedCube,
    SiteId,
    admissibility_constants,
    density_rho,
    enumerate_sites,
    lattice_from_text,
    lattice_to_text,
    load_lattice,
    make_cubic,
    make_fcc,
    make_hcp,
    neighbors,
    resolve_lattice,
    save_lattice,
    site_position,
    site_positions,
)
from .surface_density import (
    CellFormulaProblem,
    PolyhedralDensity,
    WindowMincutResult,
    cube_directions,
    direction_grid,
    fcc_density,
    hcp_density,
    icosphere_directions,
    phi_cell_formula,
    phi_fcc,
    phi_hcp,
    phi_window_mincut,
    polar_fcc,
    polar_hcp,
    polar_numeric,
    shift_cost,
    shift_cost_min,
    unit_ball,
)
from .voronoi import (
    VoronoiCell,
    VoronoiFace,
    face_area_map,
    nearest_neighbors_by_face,
    voronoi_cell,
)
from .wulff import (
    M_FCC,
    M_HCP,
    FacetOrbit,
    WulffReport,
    anisotropic_perimeter,
    compare_lattices,
    facet_census,
    fcc_symmetry_group,
    hcp_symmetry_group,
    isoperimetric_quotient,
    named_density,
    wulff_report,
    wulff_shape,
)

__version__ = "0.1.0"
