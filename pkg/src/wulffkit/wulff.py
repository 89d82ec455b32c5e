"""Wulff shapes and anisotropic isoperimetry for polyhedral densities.

The Wulff shape of a density phi is W = {z : <z, nu> <= phi(nu) for all
nu}.  For a polyhedral density (sums of |<a_i, .>| and max-of-linear
groups) W is exactly the Minkowski sum of the segments [-a_i, a_i] and
the hulls of the max groups, because support functions add under
Minkowski sums.  The construction is validated against phi on a random
direction sample at build time.

The anisotropic perimeter of a polytope is sum phi(n_f) area_f over its
facets; for the Wulff shape itself it equals 3 |W|, which pins the
isoperimetric quotient P_phi(W) |W|^(-2/3) = 3 |W|^(1/3).  The fcc
quotient 12 * 2^(2/3) beats the hcp quotient 3 * 2^(2/3) * 65^(1/3).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import convex
from .surface_density import PolyhedralDensity, fcc_density, hcp_density

__all__ = [
    "wulff_shape",
    "anisotropic_perimeter",
    "isoperimetric_quotient",
    "FacetOrbit",
    "facet_census",
    "fcc_symmetry_group",
    "hcp_symmetry_group",
    "WulffReport",
    "wulff_report",
    "report_to_dict",
    "compare_lattices",
    "M_FCC",
    "M_HCP",
]

# closed-form isoperimetric quotients of the two Wulff shapes
M_FCC = 12.0 * 2.0 ** (2.0 / 3.0)
M_HCP = 3.0 * 2.0 ** (2.0 / 3.0) * 65.0 ** (1.0 / 3.0)

_VALIDATE_DIRECTIONS = 1000
_VALIDATE_TOL = 1e-9


def wulff_shape(density: PolyhedralDensity, validate: bool = True) -> convex.Polytope:
    """The Wulff shape of a polyhedral density, by Minkowski decomposition."""
    parts = [convex.segment(a) for a in density.abs_terms]
    parts += [convex.convex_hull(g) for g in density.max_terms]
    body = convex.minkowski_sum_of(parts)
    if body.degenerate:
        return body
    if validate:
        rng = np.random.default_rng(0)
        nus = rng.normal(size=(_VALIDATE_DIRECTIONS, 3))
        nus /= np.linalg.norm(nus, axis=1, keepdims=True)
        hs = np.max(body.vertices @ nus.T, axis=0)
        phis = density.evaluate(nus)
        err = float(np.max(np.abs(hs - phis)))
        if err > _VALIDATE_TOL:
            raise RuntimeError(
                f"support function of constructed body deviates from density by {err!r}"
            )
    return body


def anisotropic_perimeter(poly: convex.Polytope, density: PolyhedralDensity) -> float:
    """Surface integral of phi(outward normal) over the facets."""
    if poly.degenerate:
        raise ValueError("anisotropic perimeter requires a full-dimensional polytope")
    return float(sum(f.area * density(f.normal) for f in poly.facets))


def isoperimetric_quotient(poly: convex.Polytope, density: PolyhedralDensity) -> float:
    """P_phi(K) |K|^(-2/3), scale-invariant; minimized by the Wulff shape."""
    if poly.volume <= 0:
        raise ValueError("quotient requires positive volume")
    return anisotropic_perimeter(poly, density) * poly.volume ** (-2.0 / 3.0)


# ---------------------------------------------------------------------------
# symmetry groups and facet census


def _closure(generators: list[np.ndarray]) -> tuple[np.ndarray, ...]:
    seen: dict[tuple, np.ndarray] = {}
    queue = [np.eye(3)] + generators
    while queue:
        g = queue.pop()
        key = tuple(np.round(g, 9).ravel())
        if key in seen:
            continue
        seen[key] = g
        for h in generators:
            queue.append(g @ h)
    return tuple(seen.values())


@lru_cache(maxsize=None)
def fcc_symmetry_group() -> tuple[np.ndarray, ...]:
    """Full cubic symmetry group: 48 signed permutation matrices."""
    perm = np.array([[0.0, 1.0, 0.0], [0.0, 0.0, 1.0], [1.0, 0.0, 0.0]])
    swap = np.array([[0.0, 1.0, 0.0], [1.0, 0.0, 0.0], [0.0, 0.0, 1.0]])
    flip = np.diag([-1.0, 1.0, 1.0])
    return _closure([perm, swap, flip])


@lru_cache(maxsize=None)
def hcp_symmetry_group() -> tuple[np.ndarray, ...]:
    """Hexagonal symmetry: rotation by pi/3 about z plus x- and z-flips (order 24)."""
    c, s = math.cos(math.pi / 3.0), math.sin(math.pi / 3.0)
    rot = np.array([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])
    return _closure([rot, np.diag([-1.0, 1.0, 1.0]), np.diag([1.0, 1.0, -1.0])])


@dataclass(frozen=True)
class FacetOrbit:
    """A symmetry class of facets: multiplicity, common area, and phi value."""

    count: int
    area: float
    phi: float
    sides: int
    example_normal: tuple[float, float, float]


def facet_census(
    poly: convex.Polytope,
    density: PolyhedralDensity,
    group: tuple[np.ndarray, ...],
) -> list[FacetOrbit]:
    """Group facets into orbits of the symmetry group acting on normals."""
    facets = list(poly.facets)
    orbits: dict[tuple, list[int]] = {}
    for idx, f in enumerate(facets):
        images = sorted(tuple(np.round(g @ f.normal, 8)) for g in group)
        orbits.setdefault(images[0], []).append(idx)

    out = []
    for key in sorted(orbits):
        members = orbits[key]
        areas = [facets[i].area for i in members]
        sides = {len(facets[i].loop) for i in members}
        if max(areas) - min(areas) > 1e-8 * max(areas) or len(sides) != 1:
            raise RuntimeError("facets in one symmetry orbit differ; census is inconsistent")
        rep = facets[members[0]]
        out.append(
            FacetOrbit(
                count=len(members),
                area=float(np.mean(areas)),
                phi=float(density(rep.normal)),
                sides=sides.pop(),
                example_normal=tuple(float(x) for x in rep.normal),
            )
        )
    out.sort(key=lambda o: (-o.area, o.count))
    return out


# ---------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class WulffReport:
    """Everything the report path serializes about one Wulff shape."""

    name: str
    volume: float
    surface_integral: float
    quotient: float
    n_vertices: int
    n_edges: int
    n_facets: int
    census: tuple[FacetOrbit, ...]


_NAMED_DENSITIES = {"fcc": fcc_density, "hcp": hcp_density}
_NAMED_GROUPS = {"fcc": fcc_symmetry_group, "hcp": hcp_symmetry_group}


def named_density(name: str) -> PolyhedralDensity:
    try:
        return _NAMED_DENSITIES[name]()
    except KeyError:
        raise ValueError(f"no closed-form density for lattice {name!r}") from None


def wulff_report(
    density: PolyhedralDensity,
    group: tuple[np.ndarray, ...] | None = None,
) -> tuple[WulffReport, convex.Polytope]:
    """Build the Wulff shape and summarize it; returns (report, body)."""
    if group is None:
        group = _NAMED_GROUPS.get(density.name, lambda: (np.eye(3),))()
    body = wulff_shape(density)
    per = anisotropic_perimeter(body, density)
    report = WulffReport(
        name=density.name,
        volume=body.volume,
        surface_integral=per,
        quotient=per * body.volume ** (-2.0 / 3.0),
        n_vertices=len(body.vertices),
        n_edges=body.edge_count(),
        n_facets=len(body.facets),
        census=tuple(facet_census(body, density, group)),
    )
    return report, body


def report_to_dict(report: WulffReport) -> dict:
    return {
        "name": report.name,
        "volume": report.volume,
        "surface_integral": report.surface_integral,
        "isoperimetric_quotient": report.quotient,
        "counts": {
            "vertices": report.n_vertices,
            "edges": report.n_edges,
            "facets": report.n_facets,
        },
        "facet_census": [
            {
                "count": o.count,
                "sides": o.sides,
                "area": o.area,
                "phi": o.phi,
                "example_normal": list(o.example_normal),
            }
            for o in report.census
        ],
    }


def compare_lattices() -> dict:
    """Isoperimetric comparison of the fcc and hcp Wulff geometries.

    Quotients are reported both in closed form and recomputed from the
    constructed bodies; the scaled limits quote m * rho^(-2/3) with
    rho = sqrt(2), the value approached by the excess energy of optimal
    N-atom clusters.
    """
    rep_fcc, _ = wulff_report(fcc_density())
    rep_hcp, _ = wulff_report(hcp_density())
    scale = 2.0 ** (-1.0 / 3.0)
    return {
        "m_fcc": {"closed_form": M_FCC, "computed": rep_fcc.quotient},
        "m_hcp": {"closed_form": M_HCP, "computed": rep_hcp.quotient},
        "verdict": "fcc" if M_FCC < M_HCP else "hcp",
        "margin": M_HCP - M_FCC,
        "excess_energy_limits": {"fcc": scale * M_FCC, "hcp": scale * M_HCP},
        "volumes": {"fcc": rep_fcc.volume, "hcp": rep_hcp.volume},
        "surface_integrals": {
            "fcc": rep_fcc.surface_integral,
            "hcp": rep_hcp.surface_integral,
        },
    }
