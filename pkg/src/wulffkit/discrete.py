"""Finite configurations of hard spheres and their discrete energies.

A configuration is a finite set of occupied lattice sites together with
a spacing epsilon.  The configurational energy localized to a region A
counts, over occupied sites in A, the bonds whose far end is vacant
(optionally weighted per displacement); globally that equals
max_coordination * N - 2 * bonds for lattices of uniform coordination.
The excess energy N^(-2/3) * energy compares cluster boundaries across
sizes and tends to the scaled Wulff quotient for minimizers.

Interface sums scaled by epsilon^2 come in two localizations: counting
ordered nearest-neighbor pairs whose first endpoint lies in A (additive
in A) or both endpoints in A (superadditive).  The nearest-neighbor
relation is the bond stencil, which for fcc/hcp agrees with sharing a
positive-area Voronoi facet.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .lattice import (
    AllSpace,
    Ball,
    LatticeSpec,
    Region,
    SiteId,
    density_rho,
    enumerate_sites,
    neighbors,
    site_position,
    site_positions,
)
from .voronoi import face_area_map

__all__ = [
    "Configuration",
    "EmpiricalMeasure",
    "energy",
    "bond_count",
    "excess_energy",
    "cut_energy",
    "cut_energy_interior",
    "empirical_measure",
    "voronoi_union",
    "boundary_faces",
    "VoronoiUnion",
    "ball_configuration",
    "halfspace_configuration",
]

WeightFn = Callable[[np.ndarray], float]


@dataclass(frozen=True, eq=False)
class Configuration:
    """A finite set of occupied sites at lattice spacing epsilon."""

    spec: LatticeSpec
    sites: frozenset[SiteId]
    epsilon: float = 1.0

    def __post_init__(self):
        if self.epsilon <= 0:
            raise ValueError("epsilon must be positive")
        if not isinstance(self.sites, frozenset):
            object.__setattr__(self, "sites", frozenset(self.sites))

    @property
    def n_atoms(self) -> int:
        return len(self.sites)

    def positions(self) -> np.ndarray:
        """Physical positions (epsilon-scaled), sorted by site id."""
        ordered = sorted(self.sites)
        return self.epsilon * site_positions(self.spec, ordered)


def _bond_weight(spec: LatticeSpec, weight: WeightFn | None, sub: int, idx: int) -> float:
    if weight is None:
        return 1.0
    w = float(weight(spec.stencils[sub][idx]))
    if w <= 0:
        raise ValueError("bond weights must be positive")
    return w


def energy(
    config: Configuration,
    region: Region | None = None,
    weight: WeightFn | None = None,
) -> float:
    """Bond deficiency of occupied sites whose position lies in ``region``.

    For each occupied x in the region, sums the weights of stencil bonds
    whose far end is vacant.  With unit weights this is an integer: the
    number of missing bonds counted from inside the region.
    """
    region = region or AllSpace()
    spec = config.spec
    occupied = config.sites
    total = 0.0
    for site in occupied:
        pos = config.epsilon * site_position(spec, site)
        if not bool(region.contains(pos[None, :])[0]):
            continue
        for idx, nbr in enumerate(neighbors(spec, site)):
            if nbr not in occupied:
                total += _bond_weight(spec, weight, site.sub, idx)
    return total


def bond_count(config: Configuration) -> int:
    """Number of unordered occupied-occupied bonds."""
    occupied = config.sites
    twice = sum(
        1
        for site in occupied
        for nbr in neighbors(config.spec, site)
        if nbr in occupied
    )
    if twice % 2:
        raise RuntimeError("asymmetric stencil: bond handshake failed")
    return twice // 2


def excess_energy(config: Configuration) -> float:
    """N^(-2/3) times the global bond deficiency (surface-dominated scale)."""
    n = config.n_atoms
    if n == 0:
        raise ValueError("empty configuration")
    return energy(config) * n ** (-2.0 / 3.0)


def cut_energy(
    config: Configuration,
    region: Region | None = None,
    weight: WeightFn | None = None,
) -> float:
    """epsilon^2-scaled interface sum over ordered nearest-neighbor pairs
    whose first endpoint lies in the region.

    Only occupied/vacant pairs contribute; both orientations of a cut
    bond are counted when both endpoints sit in the region, which makes
    the sum additive over disjoint regions.
    """
    region = region or AllSpace()
    spec = config.spec
    occupied = config.sites
    eps = config.epsilon
    total = 0.0
    for site in occupied:
        pos_x = eps * site_position(spec, site)
        x_in = bool(region.contains(pos_x[None, :])[0])
        for idx, nbr in enumerate(neighbors(spec, site)):
            if nbr in occupied:
                continue
            w = _bond_weight(spec, weight, site.sub, idx)
            if x_in:  # ordered pair (occupied, vacant)
                total += w
            pos_y = eps * site_position(spec, nbr)
            if bool(region.contains(pos_y[None, :])[0]):  # ordered pair (vacant, occupied)
                total += w
    return eps * eps * total


def cut_energy_interior(
    config: Configuration,
    region: Region | None = None,
    weight: WeightFn | None = None,
) -> float:
    """Like :func:`cut_energy` but requiring both endpoints in the region.

    Superadditive over disjoint regions (straddling bonds are dropped);
    agrees with :func:`cut_energy` on all of space.
    """
    region = region or AllSpace()
    spec = config.spec
    occupied = config.sites
    eps = config.epsilon
    total = 0.0
    for site in occupied:
        pos_x = eps * site_position(spec, site)
        if not bool(region.contains(pos_x[None, :])[0]):
            continue
        for idx, nbr in enumerate(neighbors(spec, site)):
            if nbr in occupied:
                continue
            pos_y = eps * site_position(spec, nbr)
            if bool(region.contains(pos_y[None, :])[0]):
                # both orders of this cut pair qualify
                total += 2.0 * _bond_weight(spec, weight, site.sub, idx)
    return eps * eps * total


# ---------------------------------------------------------------------------
# empirical measures and Voronoi unions


@dataclass(frozen=True)
class EmpiricalMeasure:
    """Atomic measure epsilon^3 * sum of Dirac masses at atom positions."""

    points: np.ndarray
    weight: float

    @property
    def total_mass(self) -> float:
        return self.weight * len(self.points)

    def mass(self, region: Region) -> float:
        if len(self.points) == 0:
            return 0.0
        return self.weight * float(region.contains(self.points).sum())

    def barycenter(self) -> np.ndarray:
        if len(self.points) == 0:
            raise ValueError("empty measure")
        return self.points.mean(axis=0)


def empirical_measure(config: Configuration) -> EmpiricalMeasure:
    return EmpiricalMeasure(points=config.positions(), weight=config.epsilon ** 3)


@dataclass(frozen=True)
class VoronoiUnion:
    """Volume and perimeter of the union of occupied Voronoi cells."""

    volume: float
    perimeter: float
    n_boundary_faces: int


def boundary_faces(config: Configuration) -> list[tuple[SiteId, SiteId]]:
    """(occupied, vacant) stencil pairs: the faces bounding the cell union.

    By the face/bond equivalence on fcc/hcp, these are exactly the
    positive-area Voronoi facets separating the union from its complement.
    """
    occupied = config.sites
    out = []
    for site in sorted(occupied):
        for nbr in neighbors(config.spec, site):
            if nbr not in occupied:
                out.append((site, nbr))
    return out


def voronoi_union(config: Configuration) -> VoronoiUnion:
    """Measure-theoretic size of the union of occupied cells.

    Cells tile space, so the volume is exactly N eps^3 / rho; the
    perimeter adds the epsilon^2-scaled facet areas along boundary faces.
    """
    spec = config.spec
    eps = config.epsilon
    vol = config.n_atoms * eps ** 3 / density_rho(spec)
    per = 0.0
    faces = 0
    area_maps = [face_area_map(spec, sub) for sub in range(spec.n_sublattices)]
    for site in config.sites:
        amap = area_maps[site.sub]
        for idx, nbr in enumerate(neighbors(spec, site)):
            if nbr in config.sites:
                continue
            d = spec.stencils[site.sub][idx]
            area = amap[tuple(np.round(d, 8))]
            if area > 0:
                per += area
                faces += 1
    return VoronoiUnion(volume=vol, perimeter=eps * eps * per, n_boundary_faces=faces)


# ---------------------------------------------------------------------------
# configuration builders


def ball_configuration(
    spec: LatticeSpec,
    n_atoms: int,
    epsilon: float = 1.0,
    center: Sequence[float] = (0.0, 0.0, 0.0),
) -> Configuration:
    """The n sites closest to a center (ties broken lexicographically).

    This is the ball cut used to seed ground-state searches: it already
    has surface-order energy, so optimization starts from a sane shape.
    """
    if n_atoms < 1:
        raise ValueError("need at least one atom")
    center = np.asarray(center, dtype=float)
    rho = density_rho(spec)
    # radius with ~40% headroom over the nominal ball volume
    radius = (3.0 * n_atoms / (4.0 * math.pi * rho)) ** (1.0 / 3.0) * 1.4 + 2.0
    while True:
        sites = enumerate_sites(spec, Ball(center, radius))
        if len(sites) >= n_atoms:
            break
        radius *= 1.5
    pos = site_positions(spec, sites)
    dist = np.linalg.norm(pos - center, axis=1)
    ranked = sorted(zip(np.round(dist, 9), sites))
    chosen = frozenset(site for _, site in ranked[:n_atoms])
    return Configuration(spec=spec, sites=chosen, epsilon=epsilon)


def halfspace_configuration(
    spec: LatticeSpec,
    nu: Sequence[float],
    region: Region,
) -> Configuration:
    """Sites of the discrete halfspace <x, nu> >= 0 inside a bounded region."""
    nu = np.asarray(nu, dtype=float)
    sites = enumerate_sites(spec, region)
    pos = site_positions(spec, sites)
    keep = pos @ nu >= -1e-12
    return Configuration(
        spec=spec,
        sites=frozenset(s for s, k in zip(sites, keep) if k),
        epsilon=1.0,
    )
