"""Discrete energies, interface sums, and empirical measures."""

import math

import numpy as np
import pytest

import wulffkit as wk
from wulffkit.discrete import (
    Configuration,
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
from wulffkit.lattice import AllSpace, Ball, RotatedCube, SiteId, neighbors

S2 = math.sqrt(2.0)


@pytest.fixture(scope="module")
def fcc():
    return wk.make_fcc()


@pytest.fixture(scope="module")
def hcp():
    return wk.make_hcp()


def random_configuration(spec, rng, n_max=40):
    pool = wk.enumerate_sites(spec, Ball((0.0, 0.0, 0.0), 4.0))
    n = int(rng.integers(1, min(n_max, len(pool))))
    picks = rng.choice(len(pool), size=n, replace=False)
    return Configuration(spec, frozenset(pool[i] for i in picks))


# ---------------------------------------------------------------------------
# energies


def test_single_atom_energy(fcc, hcp):
    for spec in (fcc, hcp):
        cfg = Configuration(spec, frozenset([SiteId((0, 0, 0), 0)]))
        assert energy(cfg) == 12.0
        assert bond_count(cfg) == 0
        assert excess_energy(cfg) == 12.0


def test_kissing_cluster_energy(fcc, hcp):
    # site plus its full coordination shell: 36 bonds either way
    for spec in (fcc, hcp):
        center = SiteId((0, 0, 0), 0)
        cfg = Configuration(spec, frozenset([center, *neighbors(spec, center)]))
        assert cfg.n_atoms == 13
        assert bond_count(cfg) == 36
        assert energy(cfg) == 12.0 * 13 - 2.0 * 36


def test_handshake_identity(fcc, hcp):
    rng = np.random.default_rng(1)
    for spec in (fcc, hcp):
        for _ in range(30):
            cfg = random_configuration(spec, rng)
            assert energy(cfg) == 12.0 * cfg.n_atoms - 2.0 * bond_count(cfg)


def test_energy_localizes(fcc):
    cfg = ball_configuration(fcc, 50)
    assert energy(cfg, AllSpace()) == energy(cfg)
    far = Ball((100.0, 0.0, 0.0), 1.0)
    assert energy(cfg, far) == 0.0


def test_energy_weights(fcc):
    cfg = ball_configuration(fcc, 20)
    assert energy(cfg, weight=lambda d: 2.0) == 2.0 * energy(cfg)
    with pytest.raises(ValueError):
        energy(cfg, weight=lambda d: 0.0)


def test_excess_energy_scale():
    spec = wk.make_fcc()
    cfg = ball_configuration(spec, 100)
    assert math.isclose(excess_energy(cfg), energy(cfg) * 100 ** (-2.0 / 3.0))
    with pytest.raises(ValueError):
        excess_energy(Configuration(spec, frozenset()))


# ---------------------------------------------------------------------------
# interface sums


def test_cut_energy_counts_both_orders(fcc):
    cfg = ball_configuration(fcc, 30)
    assert cut_energy(cfg) == 2.0 * energy(cfg)
    assert cut_energy_interior(cfg) == cut_energy(cfg)


def test_cut_energy_additive_on_disjoint_regions(fcc, hcp):
    rng = np.random.default_rng(2)
    for spec in (fcc, hcp):
        for _ in range(15):
            cfg = random_configuration(spec, rng)
            # split plane at a generic abscissa so no site sits on it
            e1 = (1.0, 0.0, 0.0)
            left = RotatedCube(center=(0.2611 - 5.0, 0.0, 0.0), nu=e1, side=10.0)
            right = RotatedCube(center=(0.2611 + 5.0, 0.0, 0.0), nu=e1, side=10.0)
            both = RotatedCube(center=(0.2611, 0.0, 0.0), nu=e1, side=20.0)
            f = cut_energy(cfg, both)
            assert math.isclose(
                cut_energy(cfg, left) + cut_energy(cfg, right), f, rel_tol=1e-12
            )
            # interior localization drops straddling bonds: superadditive
            fi = cut_energy_interior(cfg, both)
            assert (
                cut_energy_interior(cfg, left) + cut_energy_interior(cfg, right)
                <= fi + 1e-12
            )
            assert fi <= f + 1e-12


def test_cut_energy_epsilon_scaling(fcc):
    sites = ball_configuration(fcc, 25).sites
    coarse = Configuration(fcc, sites, epsilon=1.0)
    fine = Configuration(fcc, sites, epsilon=0.5)
    assert math.isclose(cut_energy(fine), 0.25 * cut_energy(coarse))


# ---------------------------------------------------------------------------
# measures and cell unions


def test_empirical_measure_mass(fcc):
    cfg = ball_configuration(fcc, 64, epsilon=0.5)
    mu = empirical_measure(cfg)
    assert math.isclose(mu.total_mass, 64 * 0.5 ** 3)
    assert mu.mass(AllSpace()) == mu.total_mass
    assert mu.mass(Ball((50.0, 0.0, 0.0), 1.0)) == 0.0
    assert np.linalg.norm(mu.barycenter()) < 1.0


def test_voronoi_union_volume_and_single_cell(fcc, hcp):
    for spec in (fcc, hcp):
        one = Configuration(spec, frozenset([SiteId((0, 0, 0), 0)]), epsilon=0.5)
        u = voronoi_union(one)
        assert math.isclose(u.volume, 0.5 ** 3 / S2, rel_tol=1e-12)
        # twelve rhombic faces of area sqrt(2)/4, epsilon^2-scaled
        assert u.n_boundary_faces == 12
        assert math.isclose(u.perimeter, 0.25 * 12 * S2 / 4.0, rel_tol=1e-12)
        assert len(boundary_faces(one)) == 12


def test_voronoi_union_of_cluster(fcc):
    cfg = ball_configuration(fcc, 150)
    u = voronoi_union(cfg)
    assert math.isclose(u.volume, 150 / S2, rel_tol=1e-12)
    # perimeter tracks the bond deficiency: one face of area sqrt(2)/4 per missing bond
    assert math.isclose(u.perimeter, energy(cfg) * S2 / 4.0, rel_tol=1e-12)
    assert u.n_boundary_faces == int(energy(cfg))


# ---------------------------------------------------------------------------
# builders


def test_ball_configuration_shape(fcc):
    cfg = ball_configuration(fcc, 55)
    assert cfg.n_atoms == 55
    assert cfg.sites == ball_configuration(fcc, 55).sites  # deterministic
    pos = cfg.positions()
    assert np.max(np.linalg.norm(pos, axis=1)) < 3.5
    with pytest.raises(ValueError):
        ball_configuration(fcc, 0)


def test_halfspace_configuration(hcp):
    nu = np.array([0.0, 0.0, 1.0])
    cfg = halfspace_configuration(hcp, nu, Ball((0.0, 0.0, 0.0), 4.0))
    pos = cfg.positions()
    assert np.all(pos @ nu >= -1e-12)
    assert cfg.n_atoms > 0


def test_configuration_validation(fcc):
    with pytest.raises(ValueError):
        Configuration(fcc, frozenset([SiteId((0, 0, 0), 0)]), epsilon=0.0)
    cfg = Configuration(fcc, [SiteId((0, 0, 0), 0)])  # coerced
    assert isinstance(cfg.sites, frozenset)
