"""Convex polytope kernel: hulls, halfspace intersections, Minkowski sums.

Everything here reduces to one primitive, the convex hull of a finite
point set (scipy's qhull), reused through the classical duality trick:
for a region containing the origin in its interior, the intersection of
halfspaces <a_i, x> <= b_i is the polar of the hull of the scaled normals
a_i / b_i, and conversely the polar of a polytope has one vertex n/c per
facet plane <n, x> = c.

Facets are merged coplanar polygons with outward unit normals and loops
ordered counterclockwise seen from outside.  Non-degenerate outputs are
checked against the Euler relation V - E + F = 2 and the divergence
identity sum(area * <n, centroid>) = 3 * volume at construction time.
Flat inputs (rank < 3) yield a flagged degenerate polytope with zero
volume and no facets rather than an error, so lower-dimensional summands
can participate in Minkowski sums.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np
from scipy.spatial import ConvexHull, QhullError

from .lattice import orthonormal_frame

__all__ = [
    "Halfspace",
    "Facet",
    "Polytope",
    "UnboundedRegionError",
    "convex_hull",
    "intersect_halfspaces",
    "minkowski_sum",
    "minkowski_sum_of",
    "segment",
    "support",
    "polar",
    "to_off",
    "to_obj",
    "to_json_dict",
]

_TOL = 1e-9
# coplanar simplices from one merged qhull facet share equations to ~1e-15;
# distinct facet planes of the bodies built here differ by >> 1e-7
_PLANE_DECIMALS = 7


class UnboundedRegionError(ValueError):
    """Raised when a halfspace intersection or polar is unbounded."""


@dataclass(frozen=True)
class Halfspace:
    """Closed halfspace <normal, x> <= offset (normal need not be unit)."""

    normal: np.ndarray
    offset: float

    def __post_init__(self):
        object.__setattr__(self, "normal", np.asarray(self.normal, dtype=float))
        if np.linalg.norm(self.normal) < _TOL:
            raise ValueError("halfspace normal must be nonzero")


@dataclass(frozen=True)
class Facet:
    """One merged polygonal face of a polytope."""

    normal: np.ndarray  # outward unit normal
    offset: float       # plane <normal, x> = offset
    area: float
    loop: tuple[int, ...]  # vertex indices, ccw from outside


@dataclass(frozen=True, eq=False)
class Polytope:
    """Convex polytope given by extreme vertices and merged facets.

    ``rank`` is the affine dimension of the vertex set; bodies with
    rank < 3 are flagged ``degenerate`` and carry no facet list.
    """

    vertices: np.ndarray
    facets: tuple[Facet, ...]
    volume: float
    rank: int

    @property
    def degenerate(self) -> bool:
        return self.rank < 3

    def contains(self, points: np.ndarray, tol: float = _TOL) -> np.ndarray:
        """Membership test against all facet planes (full-dimensional only)."""
        if self.degenerate:
            raise ValueError("containment test requires a full-dimensional polytope")
        points = np.atleast_2d(points)
        ok = np.ones(len(points), dtype=bool)
        for f in self.facets:
            ok &= points @ f.normal <= f.offset + tol
        return ok

    def edge_count(self) -> int:
        edges = set()
        for f in self.facets:
            loop = f.loop
            for i in range(len(loop)):
                a, b = loop[i], loop[(i + 1) % len(loop)]
                edges.add((min(a, b), max(a, b)))
        return len(edges)


def _dedup_points(points: np.ndarray) -> np.ndarray:
    rounded = np.round(points, 9)
    _, idx = np.unique(rounded, axis=0, return_index=True)
    return points[np.sort(idx)]


def _affine_rank(points: np.ndarray) -> int:
    if len(points) <= 1:
        return 0
    d = points - points[0]
    return int(np.linalg.matrix_rank(d, tol=1e-8))


def _degenerate_hull(points: np.ndarray, rank: int) -> Polytope:
    """Extreme points of a flat (rank <= 2) point set; no facets, volume 0."""
    if rank == 0:
        verts = points[:1]
    elif rank == 1:
        d = points - points[0]
        axis = d[np.argmax(np.linalg.norm(d, axis=1))]
        t = d @ axis
        verts = _dedup_points(points[[int(np.argmin(t)), int(np.argmax(t))]])
    else:
        # project to the spanning plane and hull in 2D
        d = points - points[0]
        u, s, vt = np.linalg.svd(d, full_matrices=False)
        plane = vt[:2]
        coords = d @ plane.T
        try:
            hull2 = ConvexHull(coords)
            verts = points[hull2.vertices]
        except QhullError:
            # plane hull degenerate in turn (collinear after rounding)
            return _degenerate_hull(points, 1)
    return Polytope(vertices=verts, facets=(), volume=0.0, rank=rank)


def _order_loop(vertices: np.ndarray, idx: list[int], normal: np.ndarray) -> tuple[int, ...]:
    pts = vertices[idx]
    center = pts.mean(axis=0)
    frame = orthonormal_frame(normal)
    local = (pts - center) @ frame[:2].T
    ang = np.arctan2(local[:, 1], local[:, 0])
    order = np.argsort(ang)
    loop = [idx[i] for i in order]
    # enforce ccw from outside: signed area along the outward normal
    if _loop_normal_area(vertices, loop) @ normal < 0:
        loop.reverse()
    return tuple(loop)


def _loop_normal_area(vertices: np.ndarray, loop: Sequence[int]) -> np.ndarray:
    """Vector area of a vertex loop (norm = polygon area, direction = normal)."""
    pts = vertices[list(loop)]
    center = pts.mean(axis=0)
    rel = pts - center
    total = np.zeros(3)
    for i in range(len(rel)):
        total += np.cross(rel[i], rel[(i + 1) % len(rel)])
    return total / 2.0


def _assemble(points: np.ndarray) -> Polytope:
    hull = ConvexHull(points)
    verts = points[hull.vertices]
    remap = {old: new for new, old in enumerate(hull.vertices)}

    # group triangulated simplices into merged coplanar facets
    groups: dict[tuple, set[int]] = {}
    planes: dict[tuple, np.ndarray] = {}
    for simplex, eq in zip(hull.simplices, hull.equations):
        key = tuple(np.round(eq, _PLANE_DECIMALS))
        groups.setdefault(key, set()).update(remap[v] for v in simplex)
        planes.setdefault(key, eq)

    facets = []
    for key, members in groups.items():
        eq = planes[key]
        normal = eq[:3] / np.linalg.norm(eq[:3])
        loop = _order_loop(verts, sorted(members), normal)
        va = _loop_normal_area(verts, loop)
        area = float(np.linalg.norm(va))
        offset = float(np.mean(verts[list(loop)] @ normal))
        facets.append(Facet(normal=normal, offset=offset, area=area, loop=loop))
    facets.sort(key=lambda f: (round(f.normal[0], 9), round(f.normal[1], 9), round(f.normal[2], 9)))

    poly = Polytope(vertices=verts, facets=tuple(facets), volume=float(hull.volume), rank=3)
    _check_consistency(poly)
    return poly


def _check_consistency(poly: Polytope) -> None:
    nv, nf, ne = len(poly.vertices), len(poly.facets), poly.edge_count()
    if nv - ne + nf != 2:
        raise RuntimeError(f"Euler relation violated: V={nv} E={ne} F={nf}")
    div = sum(
        f.area * float(np.dot(f.normal, poly.vertices[list(f.loop)].mean(axis=0)))
        for f in poly.facets
    )
    scale = max(abs(poly.volume), 1.0)
    if abs(div - 3.0 * poly.volume) > 1e-9 * 3.0 * scale:
        raise RuntimeError(
            f"divergence identity violated: sum a<n,c>={div!r} vs 3V={3 * poly.volume!r}"
        )


def convex_hull(points: Sequence[Sequence[float]] | np.ndarray) -> Polytope:
    """Convex hull of a point cloud; flat inputs give a degenerate polytope."""
    points = np.atleast_2d(np.asarray(points, dtype=float))
    if points.size == 0:
        raise ValueError("empty point set")
    if points.shape[1] != 3:
        raise ValueError("points must be 3-dimensional")
    points = _dedup_points(points)
    rank = _affine_rank(points)
    if rank < 3:
        return _degenerate_hull(points, rank)
    return _assemble(points)


def intersect_halfspaces(
    halfspaces: Sequence[Halfspace],
    interior_point: Sequence[float] | None = None,
) -> Polytope:
    """Bounded intersection of closed halfspaces.

    ``interior_point`` (default origin) must lie strictly inside every
    halfspace.  Raises :class:`UnboundedRegionError` when the constraints
    fail to bound the region, including the vacuous empty-set case.
    """
    if len(halfspaces) == 0:
        raise UnboundedRegionError("no halfspaces: intersection is unbounded")
    p = np.zeros(3) if interior_point is None else np.asarray(interior_point, dtype=float)

    normals = np.array([h.normal for h in halfspaces])
    slack = np.array([h.offset for h in halfspaces]) - normals @ p
    if np.any(slack <= _TOL):
        raise ValueError("interior point is not strictly inside every halfspace")

    dual = normals / slack[:, None]
    dual_hull = convex_hull(dual)
    if dual_hull.degenerate:
        raise UnboundedRegionError("halfspace normals do not span: intersection is unbounded")
    verts = []
    for f in dual_hull.facets:
        if f.offset <= _TOL:
            raise UnboundedRegionError("intersection is unbounded")
        verts.append(f.normal / f.offset)
    return convex_hull(np.array(verts) + p)


def polar(poly: Polytope) -> Polytope:
    """Polar body {z : <z, v> <= 1 for all v in P}.

    Requires the origin strictly inside ``poly``; the polar of a flat body
    would be unbounded.
    """
    if poly.degenerate:
        raise UnboundedRegionError("polar of a flat body is unbounded")
    verts = []
    for f in poly.facets:
        if f.offset <= _TOL:
            raise ValueError("polar requires the origin strictly inside the body")
        verts.append(f.normal / f.offset)
    return convex_hull(verts)


def segment(a: Sequence[float]) -> Polytope:
    """The centred segment [-a, a] as a degenerate polytope."""
    a = np.asarray(a, dtype=float)
    return convex_hull(np.array([-a, a]))


def minkowski_sum(p: Polytope, q: Polytope) -> Polytope:
    """Minkowski sum via the hull of pairwise vertex sums."""
    sums = (p.vertices[:, None, :] + q.vertices[None, :, :]).reshape(-1, 3)
    return convex_hull(sums)


def minkowski_sum_of(parts: Sequence[Polytope]) -> Polytope:
    """Fold of :func:`minkowski_sum` over a nonempty list of summands."""
    if len(parts) == 0:
        raise ValueError("empty Minkowski sum")
    acc = parts[0]
    for q in parts[1:]:
        acc = minkowski_sum(acc, q)
    return acc


def support(poly: Polytope, nu: Sequence[float]) -> float:
    """Support function max_v <v, nu> over the vertices."""
    nu = np.asarray(nu, dtype=float)
    return float(np.max(poly.vertices @ nu))


# ---------------------------------------------------------------------------
# export


def _fmt(x: float) -> str:
    return f"{x:.15g}"


def to_off(poly: Polytope) -> str:
    """OFF mesh text.  Full-dimensional bodies get their facet polygons;
    rank-2 bodies are written as a single polygon."""
    if poly.rank < 2:
        raise ValueError("cannot export a mesh of rank < 2")
    lines = ["OFF"]
    if poly.degenerate:
        ring = list(range(len(poly.vertices)))
        # vertices of a rank-2 hull are already in ring order
        faces = [ring]
    else:
        faces = [list(f.loop) for f in poly.facets]
    lines.append(f"{len(poly.vertices)} {len(faces)} {poly.edge_count() if not poly.degenerate else len(poly.vertices)}")
    for v in poly.vertices:
        lines.append(" ".join(_fmt(x) for x in v))
    for face in faces:
        lines.append(" ".join(str(i) for i in [len(face), *face]))
    return "\n".join(lines) + "\n"


def to_obj(poly: Polytope) -> str:
    """Wavefront OBJ mesh text (1-based indices)."""
    if poly.rank < 2:
        raise ValueError("cannot export a mesh of rank < 2")
    lines = []
    for v in poly.vertices:
        lines.append("v " + " ".join(_fmt(x) for x in v))
    if poly.degenerate:
        lines.append("f " + " ".join(str(i + 1) for i in range(len(poly.vertices))))
    else:
        for f in poly.facets:
            lines.append("f " + " ".join(str(i + 1) for i in f.loop))
    return "\n".join(lines) + "\n"


def to_json_dict(poly: Polytope) -> dict:
    """JSON-ready description: vertices, merged facets, volume, Euler data."""
    return {
        "vertices": [[float(x) for x in v] for v in poly.vertices],
        "facets": [
            {
                "normal": [float(x) for x in f.normal],
                "offset": float(f.offset),
                "area": float(f.area),
                "loop": list(f.loop),
            }
            for f in poly.facets
        ],
        "volume": float(poly.volume),
        "rank": int(poly.rank),
        "degenerate": bool(poly.degenerate),
        "counts": {
            "vertices": len(poly.vertices),
            "edges": poly.edge_count() if not poly.degenerate else None,
            "facets": len(poly.facets),
        },
    }
