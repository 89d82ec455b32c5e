"""Voronoi cells of the close-packed lattices.

Expected corner coordinates below are the closed-form solutions of the
bisector systems (<y, b> = 1/2 for the active neighbors b); each face is
checked as a set against the cell actually built from halfspaces.
"""

import math

import numpy as np
import pytest

import wulffkit as wk
from wulffkit.lattice import SiteId, neighbors, site_position
from wulffkit.voronoi import (
    face_area_map,
    face_corners,
    nearest_neighbors_by_face,
    voronoi_cell,
)

S2 = math.sqrt(2.0)
S3 = math.sqrt(3.0)
S6 = math.sqrt(6.0)


@pytest.fixture(scope="module")
def fcc():
    return wk.make_fcc()


@pytest.fixture(scope="module")
def hcp():
    return wk.make_hcp()


def corners_match(got: np.ndarray, want) -> bool:
    want = np.asarray(want, dtype=float)
    if len(got) != len(want):
        return False
    a = sorted(map(tuple, np.round(got, 9)))
    b = sorted(map(tuple, np.round(want, 9)))
    return np.allclose(a, b, atol=1e-9)


def test_fcc_cell_is_rhombic_dodecahedron(fcc):
    cell = voronoi_cell(fcc, SiteId((0, 0, 0), 0))
    assert math.isclose(cell.volume, S2 / 2, rel_tol=1e-12)
    assert len(cell.faces) == 12
    for face in cell.faces:
        assert len(face.corners) == 4
        assert math.isclose(face.area, S2 / 4, rel_tol=1e-9)


def test_fcc_face_corner_set_solves_bisector_system(fcc):
    # face toward (1,1,0)/sqrt2: two corners on the axes, two out of plane
    b0 = np.array([1.0, 1.0, 0.0]) / S2
    got = face_corners(fcc, SiteId((0, 0, 0), 0), b0)
    want = [
        (S2 / 2, 0.0, 0.0),
        (0.0, S2 / 2, 0.0),
        (S2 / 4, S2 / 4, S2 / 4),
        (S2 / 4, S2 / 4, -S2 / 4),
    ]
    assert corners_match(got, want)


def test_fcc_faces_are_rhombi_with_diagonal_ratio_sqrt2(fcc):
    cell = voronoi_cell(fcc, SiteId((0, 0, 0), 0))
    for face in cell.faces:
        c = face.corners
        sides = [np.linalg.norm(c[i] - c[(i + 1) % 4]) for i in range(4)]
        assert np.allclose(sides, sides[0], atol=1e-9)
        d1 = np.linalg.norm(c[2] - c[0])
        d2 = np.linalg.norm(c[3] - c[1])
        assert math.isclose(max(d1, d2) / min(d1, d2), S2, rel_tol=1e-9)


def test_hcp_cell_is_trapezo_rhombic_dodecahedron(hcp):
    for sub in (0, 1):
        cell = voronoi_cell(hcp, SiteId((0, 0, 0), sub))
        assert math.isclose(cell.volume, S2 / 2, rel_tol=1e-12)
        assert len(cell.faces) == 12
        sides = sorted(len(f.corners) for f in cell.faces)
        assert sides == [4] * 12


def test_hcp_every_face_area_is_quarter_sqrt2(hcp):
    # twelve tangent faces at distance 1/2 from the site must carry total
    # area 6 * volume = 3 * sqrt2; symmetry splits it evenly
    cell = voronoi_cell(hcp, SiteId((0, 0, 0), 0))
    for face in cell.faces:
        dist = abs(float(np.dot(face.corners[0], face.displacement))) / np.linalg.norm(
            face.displacement
        )
        assert math.isclose(dist, 0.5, abs_tol=1e-9)
        assert math.isclose(face.area, S2 / 4, rel_tol=1e-9)
    total = sum(f.area for f in cell.faces)
    assert math.isclose(total, 6 * cell.volume, rel_tol=1e-9)
    assert math.isclose(total, 3 * S2, rel_tol=1e-9)


def test_hcp_in_layer_face_is_trapezoid(hcp):
    # face toward e1: bases sqrt6/6 and sqrt6/3, height sqrt3/3
    got = face_corners(hcp, SiteId((0, 0, 0), 0), np.array([1.0, 0.0, 0.0]))
    want = [
        (0.5, S3 / 6, S6 / 12),
        (0.5, -S3 / 6, S6 / 6),
        (0.5, S3 / 6, -S6 / 12),
        (0.5, -S3 / 6, -S6 / 6),
    ]
    assert corners_match(got, want)
    pts = np.asarray(want)
    short = np.linalg.norm(pts[0] - pts[2])
    long = np.linalg.norm(pts[1] - pts[3])
    assert math.isclose(short, S6 / 6, rel_tol=1e-12)
    assert math.isclose(long, S6 / 3, rel_tol=1e-12)
    area = 0.5 * (short + long) * (S3 / 3)
    assert math.isclose(area, S2 / 4, rel_tol=1e-12)


def test_hcp_opposite_in_layer_face_mirrors(hcp):
    got = face_corners(hcp, SiteId((0, 0, 0), 0), np.array([-1.0, 0.0, 0.0]))
    want = [
        (-0.5, S3 / 6, S6 / 12),
        (-0.5, -S3 / 6, S6 / 6),
        (-0.5, S3 / 6, -S6 / 12),
        (-0.5, -S3 / 6, -S6 / 6),
    ]
    assert corners_match(got, want)


def test_hcp_out_of_layer_face_is_rhombus(hcp):
    # face toward the upper-layer neighbor v1 = (1/2, sqrt3/6, sqrt6/3);
    # diagonals 1/sqrt2 and 1 give area sqrt2/4
    v1 = np.array([0.5, S3 / 6, S6 / 3])
    got = face_corners(hcp, SiteId((0, 0, 0), 0), v1)
    want = [
        (0.5, S3 / 6, S6 / 12),
        (0.5, -S3 / 6, S6 / 6),
        (0.0, 0.0, S6 / 4),
        (0.0, S3 / 3, S6 / 6),
    ]
    assert corners_match(got, want)
    pts = np.asarray(want)
    sides = sorted(
        float(np.linalg.norm(pts[i] - pts[j]))
        for i in range(4)
        for j in range(i + 1, 4)
    )
    # four equal sides, then the two diagonals
    assert np.allclose(sides[:4], math.sqrt(0.375), atol=1e-12)
    assert math.isclose(sides[4], 1 / S2, rel_tol=1e-12)
    assert math.isclose(sides[5], 1.0, rel_tol=1e-12)
    assert math.isclose(0.5 * sides[4] * sides[5], S2 / 4, rel_tol=1e-12)


@pytest.mark.parametrize("name", ["fcc", "hcp"])
def test_neighbors_by_face_equal_stencil(name):
    spec = wk.resolve_lattice(name)
    for sub in range(spec.n_sublattices):
        site = SiteId((0, 0, 0), sub)
        assert sorted(nearest_neighbors_by_face(spec, site)) == sorted(neighbors(spec, site))


def test_face_shared_with_neighbor_cell(fcc):
    # the face toward b is the face of the neighbor cell toward -b, shifted
    site = SiteId((0, 0, 0), 0)
    nbr = neighbors(fcc, site)[0]
    b = site_position(fcc, nbr) - site_position(fcc, site)
    mine = face_corners(fcc, site, b)
    theirs = face_corners(fcc, nbr, -b) + site_position(fcc, nbr)
    assert corners_match(mine, theirs)


def test_cells_tile_space_volume(hcp):
    # per periodicity cell: n_sub cells fill |det(basis)| exactly
    total = sum(
        voronoi_cell(hcp, SiteId((0, 0, 0), sub)).volume
        for sub in range(hcp.n_sublattices)
    )
    det = abs(float(np.linalg.det(hcp.matrix)))
    assert math.isclose(total, det, rel_tol=1e-12)


def test_face_area_map_covers_stencil(hcp):
    for sub in (0, 1):
        amap = face_area_map(hcp, sub)
        assert len(amap) == 12
        assert all(math.isclose(a, S2 / 4, rel_tol=1e-9) for a in amap.values())


def test_cubic_lattice_voronoi_is_unit_cube():
    cubic = wk.make_cubic()
    cell = voronoi_cell(cubic, SiteId((0, 0, 0), 0))
    assert math.isclose(cell.volume, 1.0, rel_tol=1e-12)
    assert len(cell.faces) == 6
    assert all(math.isclose(f.area, 1.0, rel_tol=1e-9) for f in cell.faces)
