"""Voronoi cells of lattice sites and face-based nearest neighbors.

The cell of a site x is the set of points at least as close to x as to
any other site.  It is cut out by the bisector halfspaces <d, y - x> <=
|d|^2 / 2 over lattice displacements d; candidates within radius 3
suffice, since the cell fits inside a ball of the covering radius
(well below 1 for the lattices handled here).

Two sites are nearest neighbors when their cells share a facet of
positive area.  For fcc and hcp this face-based relation coincides with
the unit-distance stencil, which is what ties the bond-counting energies
to the perimeter of the union of occupied cells.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import convex
from .lattice import Ball, LatticeSpec, SiteId, enumerate_sites, site_position, site_positions

__all__ = [
    "VoronoiFace",
    "VoronoiCell",
    "voronoi_cell",
    "nearest_neighbors_by_face",
    "face_corners",
    "face_area_map",
]

_FACE_AREA_TOL = 1e-10
_CANDIDATE_RADIUS = 3.0


@dataclass(frozen=True)
class VoronoiFace:
    """One facet of a Voronoi cell, keyed by the generating displacement."""

    displacement: np.ndarray  # vector from the site to the facet's co-owner
    neighbor: SiteId
    area: float
    corners: np.ndarray  # (k, 3) loop in site-local coordinates


@dataclass(frozen=True)
class VoronoiCell:
    """Voronoi cell in site-local coordinates (the site sits at the origin)."""

    site: SiteId
    polytope: convex.Polytope
    faces: tuple[VoronoiFace, ...]

    @property
    def volume(self) -> float:
        return self.polytope.volume


def voronoi_cell(spec: LatticeSpec, site: SiteId) -> VoronoiCell:
    """Construct the Voronoi cell of a site from bisector halfspaces."""
    center = site_position(spec, site)
    candidates = enumerate_sites(spec, Ball(center, _CANDIDATE_RADIUS))
    pos = site_positions(spec, candidates)
    disp = pos - center
    keep = np.linalg.norm(disp, axis=1) > 1e-9  # drop the site itself

    halfspaces = [
        convex.Halfspace(d, float(d @ d) / 2.0) for d in disp[keep]
    ]
    poly = convex.intersect_halfspaces(halfspaces)

    others = [c for c, k in zip(candidates, keep) if k]
    faces = []
    for f in poly.facets:
        d = 2.0 * f.offset * f.normal
        dists = np.linalg.norm(disp[keep] - d, axis=1)
        j = int(np.argmin(dists))
        if dists[j] > 1e-8:
            raise RuntimeError(f"facet displacement {d.tolist()} matches no candidate site")
        faces.append(
            VoronoiFace(
                displacement=disp[keep][j],
                neighbor=others[j],
                area=f.area,
                corners=poly.vertices[list(f.loop)],
            )
        )
    return VoronoiCell(site=site, polytope=poly, faces=tuple(faces))


def nearest_neighbors_by_face(spec: LatticeSpec, site: SiteId) -> list[SiteId]:
    """Sites whose cells share a positive-area facet with this one."""
    cell = voronoi_cell(spec, site)
    return [f.neighbor for f in cell.faces if f.area > _FACE_AREA_TOL]


def face_corners(spec: LatticeSpec, site: SiteId, b0) -> np.ndarray:
    """Corners of the facet generated by displacement ``b0``, site-local.

    Raises ValueError when no facet of positive area corresponds to ``b0``
    (for fcc/hcp that means ``b0`` is not a stencil displacement).
    """
    b0 = np.asarray(b0, dtype=float)
    cell = voronoi_cell(spec, site)
    for f in cell.faces:
        if np.linalg.norm(f.displacement - b0) < 1e-8 and f.area > _FACE_AREA_TOL:
            return f.corners.copy()
    raise ValueError(f"no positive-area facet for displacement {b0.tolist()}")


_AREA_MAPS: dict[tuple[int, int], dict[tuple, float]] = {}
_SPEC_KEEPALIVE: dict[int, LatticeSpec] = {}


def face_area_map(spec: LatticeSpec, sub: int) -> dict[tuple, float]:
    """Facet area per stencil displacement (rounded-tuple key), cached.

    Cells are translates within a sublattice, so one construction per
    sublattice serves every site.  Used by perimeter computations where a
    per-bond facet area is needed.
    """
    key = (id(spec), sub)
    if key not in _AREA_MAPS:
        _SPEC_KEEPALIVE[id(spec)] = spec
        cell = voronoi_cell(spec, SiteId((0, 0, 0), sub))
        areas: dict[tuple, float] = {}
        for f in cell.faces:
            areas[tuple(np.round(f.displacement, 8))] = f.area
        # stencil displacements with no facet get area 0
        for d in spec.stencils[sub]:
            areas.setdefault(tuple(np.round(d, 8)), 0.0)
        _AREA_MAPS[key] = areas
    return _AREA_MAPS[key]
