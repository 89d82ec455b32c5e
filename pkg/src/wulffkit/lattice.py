"""Periodic point lattices with unit-distance bond stencils.

A lattice is described by three basis generators, a list of sublattice
offsets, and one bond stencil per sublattice: the displacement vectors to
the sites at Euclidean distance exactly 1.  The two lattices of interest
are the face-centred cubic packing (one sublattice, coordination 12) and
the hexagonal close packing (two sublattices, coordination 12), both with
sphere-packing density sqrt(2) points per unit volume at bond length 1.

Stencils are stored explicitly and validated at construction against a
brute-force distance-1 search over a 5^3 block of cells, so a corrupt
lattice file fails fast rather than producing silently wrong energies.
"""

from __future__ import annotations

import io
import itertools
import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

import numpy as np

__all__ = [
    "SiteId",
    "LatticeSpec",
    "AdmissibilityConstants",
    "Region",
    "AllSpace",
    "Box",
    "Ball",
    "RotatedCube",
    "make_fcc",
    "make_hcp",
    "make_cubic",
    "load_lattice",
    "save_lattice",
    "lattice_from_text",
    "lattice_to_text",
    "enumerate_sites",
    "enumerate_site_arrays",
    "site_position",
    "site_positions",
    "neighbors",
    "density_rho",
    "admissibility_constants",
    "orthonormal_frame",
    "resolve_lattice",
]

# Displacements are matched to lattice points at this resolution.
_GEOM_TOL = 1e-9
# Declared stencil vectors must have unit norm to this resolution.
_UNIT_TOL = 1e-12


class SiteId(NamedTuple):
    """A lattice site: integer cell coordinates plus a sublattice index.

    Position is ``basis.T @ cell + offsets[sub]``.  Tuple ordering gives a
    deterministic lexicographic order on sites, used wherever a canonical
    enumeration or tie-break is required.
    """

    cell: tuple[int, int, int]
    sub: int


@dataclass(frozen=True)
class AdmissibilityConstants:
    """Separation/covering constants certified for a lattice.

    ``r`` is the minimum distance between distinct sites.  ``R`` is an
    upper bound for the covering radius, obtained by scanning a regular
    grid over the periodicity cell and padding by the grid diameter (the
    distance-to-lattice function is 1-Lipschitz, so the padded maximum
    dominates the true supremum).
    """

    r: float
    R: float
    grid_n: int


@dataclass(frozen=True, eq=False)
class LatticeSpec:
    """Immutable description of a periodic lattice with bond stencils.

    Attributes
    ----------
    name : str
        Short identifier ("fcc", "hcp", or a user label).
    basis : (3, 3) ndarray
        Rows are the lattice generators.
    offsets : (k, 3) ndarray
        Sublattice shifts; ``offsets[0]`` is the zero vector.
    stencils : tuple of (m_i, 3) ndarrays
        Unit-distance displacement vectors per sublattice.
    neighbor_maps : nested tuples
        For sublattice ``i``, entry ``j`` is ``(dcell, sub)`` such that the
        neighbor of ``(cell, i)`` along ``stencils[i][j]`` is
        ``(cell + dcell, sub)``.
    max_coordination : int
        Largest stencil size (12 for fcc/hcp).
    """

    name: str
    basis: np.ndarray
    offsets: np.ndarray
    stencils: tuple[np.ndarray, ...]
    neighbor_maps: tuple[tuple[tuple[tuple[int, int, int], int], ...], ...]
    max_coordination: int

    @property
    def n_sublattices(self) -> int:
        return len(self.offsets)

    @property
    def matrix(self) -> np.ndarray:
        """Column matrix M with position = M @ cell + offset."""
        return self.basis.T

    def coordination(self, sub: int) -> int:
        return len(self.stencils[sub])


# ---------------------------------------------------------------------------
# regions


class Region:
    """Predicate on 3-space used to localize energies and enumerations."""

    def contains(self, points: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def bounding_box(self) -> tuple[np.ndarray, np.ndarray] | None:
        """Axis-aligned (lo, hi) enclosing the region, or None if unbounded."""
        raise NotImplementedError


class AllSpace(Region):
    """The whole of R^3."""

    def contains(self, points: np.ndarray) -> np.ndarray:
        return np.ones(len(points), dtype=bool)

    def bounding_box(self) -> None:
        return None


class Box(Region):
    """Closed axis-aligned box [lo, hi]."""

    def __init__(self, lo: Sequence[float], hi: Sequence[float]):
        self.lo = np.asarray(lo, dtype=float)
        self.hi = np.asarray(hi, dtype=float)
        if np.any(self.hi < self.lo):
            raise ValueError("box upper corner below lower corner")

    def contains(self, points: np.ndarray) -> np.ndarray:
        points = np.atleast_2d(points)
        return np.all((points >= self.lo - _GEOM_TOL) & (points <= self.hi + _GEOM_TOL), axis=1)

    def bounding_box(self) -> tuple[np.ndarray, np.ndarray]:
        return self.lo.copy(), self.hi.copy()


class Ball(Region):
    """Closed Euclidean ball."""

    def __init__(self, center: Sequence[float], radius: float):
        if radius < 0:
            raise ValueError("negative radius")
        self.center = np.asarray(center, dtype=float)
        self.radius = float(radius)

    def contains(self, points: np.ndarray) -> np.ndarray:
        points = np.atleast_2d(points)
        return np.linalg.norm(points - self.center, axis=1) <= self.radius + _GEOM_TOL

    def bounding_box(self) -> tuple[np.ndarray, np.ndarray]:
        r = self.radius
        return self.center - r, self.center + r


class RotatedCube(Region):
    """Closed cube of given side, one axis aligned with a unit direction nu.

    The in-plane axes are completed deterministically by
    :func:`orthonormal_frame`, so enumeration order is reproducible.
    """

    def __init__(self, center: Sequence[float], nu: Sequence[float], side: float):
        if side <= 0:
            raise ValueError("cube side must be positive")
        self.center = np.asarray(center, dtype=float)
        self.nu = _unit(np.asarray(nu, dtype=float))
        self.side = float(side)
        self.frame = orthonormal_frame(self.nu)

    def contains(self, points: np.ndarray) -> np.ndarray:
        points = np.atleast_2d(points)
        local = (points - self.center) @ self.frame.T
        return np.all(np.abs(local) <= self.side / 2 + _GEOM_TOL, axis=1)

    def bounding_box(self) -> tuple[np.ndarray, np.ndarray]:
        # corners of the rotated cube
        h = self.side / 2
        signs = np.array(list(itertools.product([-1, 1], repeat=3)), dtype=float)
        corners = self.center + (signs * h) @ self.frame
        return corners.min(axis=0), corners.max(axis=0)


def _unit(v: np.ndarray) -> np.ndarray:
    n = np.linalg.norm(v)
    if n == 0:
        raise ValueError("zero direction vector")
    return v / n


def orthonormal_frame(nu: Sequence[float]) -> np.ndarray:
    """Right-handed orthonormal frame (t1, t2, nu) with deterministic seed.

    The first tangent is the Gram-Schmidt projection of the standard basis
    vector least aligned with nu (lowest index on ties); the second is
    nu x t1.  Rows of the returned 3x3 array are (t1, t2, nu).
    """
    nu = _unit(np.asarray(nu, dtype=float))
    seed_idx = int(np.argmin(np.abs(nu)))  # argmin takes the lowest index on ties
    seed = np.zeros(3)
    seed[seed_idx] = 1.0
    t1 = _unit(seed - np.dot(seed, nu) * nu)
    t2 = np.cross(nu, t1)
    return np.array([t1, t2, nu])


# ---------------------------------------------------------------------------
# construction and validation


def _build(
    name: str,
    basis: np.ndarray,
    offsets: np.ndarray,
    stencils: Sequence[np.ndarray],
    max_coordination: int,
) -> LatticeSpec:
    basis = np.asarray(basis, dtype=float)
    offsets = np.atleast_2d(np.asarray(offsets, dtype=float))
    if basis.shape != (3, 3):
        raise ValueError("basis must be 3x3")
    if abs(np.linalg.det(basis)) < _GEOM_TOL:
        raise ValueError("basis generators are linearly dependent")
    if offsets.shape[0] < 1 or offsets.shape[1] != 3:
        raise ValueError("need at least one sublattice offset of dimension 3")
    if np.linalg.norm(offsets[0]) > _GEOM_TOL:
        raise ValueError("first sublattice offset must be zero")
    if len(stencils) != len(offsets):
        raise ValueError("one stencil per sublattice required")

    stencils = tuple(np.atleast_2d(np.asarray(s, dtype=float)) for s in stencils)
    for i, sten in enumerate(stencils):
        norms = np.linalg.norm(sten, axis=1)
        if np.any(np.abs(norms - 1.0) > _UNIT_TOL):
            bad = float(norms[np.argmax(np.abs(norms - 1.0))])
            raise ValueError(f"stencil {i} contains a displacement of norm {bad!r}, expected 1")

    M = basis.T
    Minv = np.linalg.inv(M)

    # offsets must be distinct modulo the lattice
    for i in range(len(offsets)):
        for j in range(i + 1, len(offsets)):
            frac = Minv @ (offsets[i] - offsets[j])
            if np.all(np.abs(frac - np.round(frac)) < _GEOM_TOL):
                raise ValueError(f"offsets {i} and {j} coincide modulo the lattice")

    # resolve each stencil displacement to (cell shift, target sublattice)
    neighbor_maps: list[tuple[tuple[tuple[int, int, int], int], ...]] = []
    for i, sten in enumerate(stencils):
        entries: list[tuple[tuple[int, int, int], int]] = []
        for d in sten:
            target = None
            for j in range(len(offsets)):
                coeff = Minv @ (d + offsets[i] - offsets[j])
                cell = np.round(coeff).astype(int)
                if np.max(np.abs(coeff - cell)) < _GEOM_TOL:
                    target = (tuple(int(c) for c in cell), j)
                    break
            if target is None:
                raise ValueError(
                    f"stencil {i} displacement {d.tolist()} does not connect lattice points"
                )
            entries.append(target)
        neighbor_maps.append(tuple(entries))

    spec = LatticeSpec(
        name=name,
        basis=basis,
        offsets=offsets,
        stencils=stencils,
        neighbor_maps=tuple(neighbor_maps),
        max_coordination=int(max_coordination),
    )
    _validate_stencils(spec)
    return spec


def _validate_stencils(spec: LatticeSpec) -> None:
    """Check declared stencils against a brute-force distance-1 search.

    Scans the 5^3 block of cells around the origin, which covers every
    candidate at distance 1 because all generators have norm >= the minimum
    site separation.
    """
    M = spec.matrix
    rng = range(-2, 3)
    points = []
    for cell in itertools.product(rng, rng, rng):
        for j in range(spec.n_sublattices):
            points.append(M @ np.array(cell, dtype=float) + spec.offsets[j])
    points = np.array(points)

    for i in range(spec.n_sublattices):
        d = points - spec.offsets[i]
        at_one = d[np.abs(np.linalg.norm(d, axis=1) - 1.0) < _GEOM_TOL]
        found = {tuple(np.round(v, 9)) for v in at_one}
        declared = {tuple(np.round(v, 9)) for v in spec.stencils[i]}
        if found != declared:
            missing = found - declared
            extra = declared - found
            raise ValueError(
                f"stencil {i} disagrees with brute-force unit-distance search: "
                f"missing={sorted(missing)!r} extra={sorted(extra)!r}"
            )

    # bond symmetry: each entry must have a reverse entry on the target stencil
    for i in range(spec.n_sublattices):
        for d, (dcell, j) in zip(spec.stencils[i], spec.neighbor_maps[i]):
            back = -d
            if not any(np.linalg.norm(back - e) < _GEOM_TOL for e in spec.stencils[j]):
                raise ValueError(f"stencil is not symmetric: missing reverse of {d.tolist()}")

    sizes = [len(s) for s in spec.stencils]
    if max(sizes) != spec.max_coordination:
        raise ValueError(
            f"max_coordination={spec.max_coordination} but largest stencil has {max(sizes)} bonds"
        )


def _sorted_stencil(vectors: Iterable[np.ndarray]) -> np.ndarray:
    arr = np.array([np.asarray(v, dtype=float) for v in vectors])
    order = np.lexsort((arr[:, 2], arr[:, 1], arr[:, 0]))
    return arr[order]


def make_fcc() -> LatticeSpec:
    """Face-centred cubic lattice at bond length 1.

    Generators (1,1,0)/sqrt2, (1,0,1)/sqrt2, (0,1,1)/sqrt2; a single
    sublattice with the 12 unit-distance displacements given by the
    generators, their negatives, and their pairwise differences.
    """
    s = 1.0 / math.sqrt(2.0)
    b1 = np.array([1.0, 1.0, 0.0]) * s
    b2 = np.array([1.0, 0.0, 1.0]) * s
    b3 = np.array([0.0, 1.0, 1.0]) * s
    sten = [b1, b2, b3, b1 - b2, b1 - b3, b2 - b3]
    sten = sten + [-v for v in sten]
    return _build(
        "fcc",
        np.array([b1, b2, b3]),
        np.zeros((1, 3)),
        [_sorted_stencil(sten)],
        max_coordination=12,
    )


def make_hcp() -> LatticeSpec:
    """Hexagonal close packing at bond length 1.

    Generators e1=(1,0,0), e2=(1/2)(1,sqrt3,0), e3=(2 sqrt6/3)(0,0,1) and
    two sublattices at offsets 0 and v1=(e1+e2)/3+e3/2 (|v1|=1).  Each site
    has 6 in-plane bonds within its sublattice plus 6 bonds into the other
    sublattice (3 up, 3 down).
    """
    e1 = np.array([1.0, 0.0, 0.0])
    e2 = np.array([0.5, math.sqrt(3.0) / 2.0, 0.0])
    e3 = np.array([0.0, 0.0, 2.0 * math.sqrt(6.0) / 3.0])
    v1 = (e1 + e2) / 3.0 + e3 / 2.0

    in_plane = [e1, e2, e1 - e2]
    in_plane = in_plane + [-v for v in in_plane]
    cross0 = [v1, v1 - e1, v1 - e2, v1 - e3, v1 - e1 - e3, v1 - e2 - e3]
    sten0 = _sorted_stencil(in_plane + cross0)
    sten1 = _sorted_stencil(in_plane + [-v for v in cross0])
    return _build(
        "hcp",
        np.array([e1, e2, e3]),
        np.array([np.zeros(3), v1]),
        [sten0, sten1],
        max_coordination=12,
    )


def make_cubic() -> LatticeSpec:
    """Simple cubic lattice Z^3 with the 6 axis bonds (coordination 6)."""
    eye = np.eye(3)
    sten = [eye[i] * s for i in range(3) for s in (1.0, -1.0)]
    return _build("cubic", eye, np.zeros((1, 3)), [_sorted_stencil(sten)], max_coordination=6)


# ---------------------------------------------------------------------------
# lattice spec files


def lattice_to_text(spec: LatticeSpec) -> str:
    """Serialize a lattice spec to its text format (15 significant digits)."""
    out = io.StringIO()
    out.write(f"name {spec.name}\n")
    for row in spec.basis:
        out.write("basis " + " ".join(f"{x:.15g}" for x in row) + "\n")
    for off in spec.offsets:
        out.write("offset " + " ".join(f"{x:.15g}" for x in off) + "\n")
    for i, sten in enumerate(spec.stencils):
        for d in sten:
            out.write(f"stencil {i}: " + " ".join(f"{x:.15g}" for x in d) + "\n")
    out.write(f"max_coordination {spec.max_coordination}\n")
    return out.getvalue()


def lattice_from_text(text: str) -> LatticeSpec:
    """Parse the lattice spec text format.

    Lines: optional ``name <label>``, three ``basis x y z`` lines, one or
    more ``offset x y z`` lines, ``stencil i: x y z`` lines, and a final
    ``max_coordination n``.  ``#`` starts a comment; blank lines ignored.
    """
    name = "custom"
    basis_rows: list[list[float]] = []
    offsets: list[list[float]] = []
    stencil_rows: dict[int, list[list[float]]] = {}
    max_coord: int | None = None

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        key = tokens[0]
        try:
            if key == "name":
                name = tokens[1]
            elif key == "basis":
                basis_rows.append([float(t) for t in tokens[1:4]])
            elif key == "offset":
                offsets.append([float(t) for t in tokens[1:4]])
            elif key == "stencil":
                idx = int(tokens[1].rstrip(":"))
                stencil_rows.setdefault(idx, []).append([float(t) for t in tokens[2:5]])
            elif key == "max_coordination":
                max_coord = int(tokens[1])
            else:
                raise ValueError(f"unknown keyword {key!r}")
        except (IndexError, ValueError) as exc:
            raise ValueError(f"lattice file line {lineno}: {exc}") from exc

    if len(basis_rows) != 3:
        raise ValueError(f"expected 3 basis lines, found {len(basis_rows)}")
    if not offsets:
        raise ValueError("no offset lines")
    if max_coord is None:
        raise ValueError("missing max_coordination line")
    if sorted(stencil_rows) != list(range(len(offsets))):
        raise ValueError("stencil indices must cover each sublattice exactly")

    stencils = [_sorted_stencil(stencil_rows[i]) for i in range(len(offsets))]
    return _build(name, np.array(basis_rows), np.array(offsets), stencils, max_coord)


def load_lattice(path: str) -> LatticeSpec:
    with open(path, "r", encoding="utf-8") as fh:
        return lattice_from_text(fh.read())


def save_lattice(spec: LatticeSpec, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(lattice_to_text(spec))


def resolve_lattice(token: str) -> LatticeSpec:
    """Resolve a CLI lattice token: 'fcc', 'hcp', 'cubic', or 'file:PATH'."""
    if token == "fcc":
        return make_fcc()
    if token == "hcp":
        return make_hcp()
    if token == "cubic":
        return make_cubic()
    if token.startswith("file:"):
        return load_lattice(token[5:])
    raise ValueError(f"unknown lattice {token!r} (expected fcc, hcp, cubic, or file:PATH)")


# ---------------------------------------------------------------------------
# queries


def site_position(spec: LatticeSpec, site: SiteId) -> np.ndarray:
    return spec.matrix @ np.asarray(site.cell, dtype=float) + spec.offsets[site.sub]


def site_positions(spec: LatticeSpec, sites: Sequence[SiteId]) -> np.ndarray:
    """Positions of many sites, shape (n, 3)."""
    if len(sites) == 0:
        return np.zeros((0, 3))
    cells = np.array([s.cell for s in sites], dtype=float)
    offs = spec.offsets[np.array([s.sub for s in sites])]
    return cells @ spec.basis + offs


def neighbors(spec: LatticeSpec, site: SiteId) -> list[SiteId]:
    """The unit-distance neighbors of a site, in stencil order."""
    cx, cy, cz = site.cell
    out = []
    for (dx, dy, dz), sub in spec.neighbor_maps[site.sub]:
        out.append(SiteId((cx + dx, cy + dy, cz + dz), sub))
    return out


def density_rho(spec: LatticeSpec) -> float:
    """Points per unit volume: sublattice count / periodicity cell volume."""
    return spec.n_sublattices / abs(np.linalg.det(spec.basis))


def enumerate_site_arrays(
    spec: LatticeSpec, region: Region
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Sites inside a bounded region as arrays (cells, sublattices, positions).

    Vectorized workhorse behind :func:`enumerate_sites`; rows are sorted
    lexicographically by (cell, sub).
    """
    bbox = region.bounding_box()
    if bbox is None:
        raise ValueError("region must be bounded to enumerate sites")
    lo, hi = bbox
    corners = np.array(list(itertools.product(*zip(lo, hi))), dtype=float)
    Minv = np.linalg.inv(spec.matrix)

    all_cells, all_subs, all_pos = [], [], []
    for sub in range(spec.n_sublattices):
        frac = (corners - spec.offsets[sub]) @ Minv.T
        cmin = np.floor(frac.min(axis=0)).astype(int) - 1
        cmax = np.ceil(frac.max(axis=0)).astype(int) + 1
        axes = [np.arange(cmin[k], cmax[k] + 1) for k in range(3)]
        grid = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, 3)
        pos = grid.astype(float) @ spec.basis + spec.offsets[sub]
        mask = region.contains(pos)
        all_cells.append(grid[mask])
        all_subs.append(np.full(int(mask.sum()), sub, dtype=np.int64))
        all_pos.append(pos[mask])
    cells = np.concatenate(all_cells)
    subs = np.concatenate(all_subs)
    pos = np.concatenate(all_pos)
    order = np.lexsort((subs, cells[:, 2], cells[:, 1], cells[:, 0]))
    return cells[order], subs[order], pos[order]


def enumerate_sites(spec: LatticeSpec, region: Region) -> list[SiteId]:
    """All lattice sites inside a bounded region, in lexicographic order."""
    cells, subs, _ = enumerate_site_arrays(spec, region)
    return [
        SiteId((int(c[0]), int(c[1]), int(c[2])), int(s)) for c, s in zip(cells, subs)
    ]


def admissibility_constants(spec: LatticeSpec, grid_n: int = 24) -> AdmissibilityConstants:
    """Certified separation r and covering-radius bound R.

    r is the exact minimum pairwise distance (computed over a 5^3 cell
    block, which contains a closest pair by periodicity).  R is the grid
    maximum of the distance-to-lattice function over the periodicity cell
    plus the grid diameter; Lipschitz continuity makes the sum a true
    upper bound.
    """
    from scipy.spatial import cKDTree

    M = spec.matrix
    rng = range(-2, 3)
    pts = []
    for cell in itertools.product(rng, rng, rng):
        for j in range(spec.n_sublattices):
            pts.append(M @ np.array(cell, dtype=float) + spec.offsets[j])
    pts = np.array(pts)

    tree = cKDTree(pts)
    # distance from each sublattice representative to its nearest distinct site
    r = math.inf
    for j in range(spec.n_sublattices):
        d, _ = tree.query(spec.offsets[j], k=2)
        r = min(r, float(d[1]))
    if r <= _GEOM_TOL:
        raise ValueError("lattice has coincident sites")

    u = (np.arange(grid_n) + 0.5) / grid_n
    grid = np.stack(np.meshgrid(u, u, u, indexing="ij"), axis=-1).reshape(-1, 3)
    samples = grid @ spec.basis
    dists, _ = tree.query(samples)
    # farthest grid point, padded by the diameter of one grid cell
    cell_diag = np.linalg.norm(spec.basis.sum(axis=0) / grid_n)
    R = float(dists.max() + cell_diag)
    return AdmissibilityConstants(r=r, R=R, grid_n=grid_n)
