"""Ground-state search and shape convergence for sticky-sphere clusters.

The energy of an N-atom configuration is coordination * N - 2 * bonds,
so ground states maximize bond count.  Small clusters (N <= 10) are
solved exactly by enumerating connected subsets up to translation with
an admissible branch-and-bound; larger clusters are optimized by
simulated annealing of boundary-atom relocations, seeded from a cut of
the equilibrium shape (or of a ball) of the right atom count.

Convergence toward the Wulff shape is quantified two ways: the excess
energy N^(-2/3) * energy against its macroscopic limit, and the volume
of the symmetric difference between the union of occupied Voronoi cells
(rescaled by epsilon = N^(-1/3)) and the mass-matched Wulff body, after
aligning by a translation found from the densest ball of atoms.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .discrete import Configuration, ball_configuration, energy
from .lattice import (
    Ball,
    LatticeSpec,
    SiteId,
    density_rho,
    enumerate_site_arrays,
    site_positions,
)
from .surface_density import PolyhedralDensity
from .wulff import M_FCC, M_HCP, wulff_report

__all__ = [
    "AnnealSchedule",
    "AnnealResult",
    "anneal_ground_state",
    "exact_ground_state",
    "wulff_configuration",
    "nucleation_center",
    "ShapeDeviation",
    "shape_deviation",
    "ScalingRow",
    "scaling_curve",
    "excess_energy_limit",
]

_EXACT_N_MAX = 10


# ---------------------------------------------------------------------------
# packed site keys: lexicographic (cell, sub) order == numeric key order


class _Packed:
    """Sites packed into integers with additive neighbor offsets."""

    _B = 1 << 20
    _L = 1 << 21

    def __init__(self, spec: LatticeSpec):
        self.spec = spec
        self.nsub = spec.n_sublattices
        self.deltas: list[list[int]] = []
        for i in range(self.nsub):
            row = []
            for (dx, dy, dz), j in spec.neighbor_maps[i]:
                row.append(((dx * self._L + dy) * self._L + dz) * self.nsub + (j - i))
            self.deltas.append(row)
        self.coords = [len(s) for s in spec.stencils]

    def pack(self, site: SiteId) -> int:
        cx, cy, cz = site.cell
        return (
            ((cx + self._B) * self._L + (cy + self._B)) * self._L + (cz + self._B)
        ) * self.nsub + site.sub

    def unpack(self, key: int) -> SiteId:
        key, sub = divmod(key, self.nsub)
        key, cz = divmod(key, self._L)
        cx, cy = divmod(key, self._L)
        return SiteId((cx - self._B, cy - self._B, cz - self._B), sub)

    def neighbors(self, key: int) -> list[int]:
        sub = key % self.nsub
        return [key + d for d in self.deltas[sub]]

    def coordination(self, key: int) -> int:
        return self.coords[key % self.nsub]


def _uniform_coordination(spec: LatticeSpec) -> int:
    sizes = {len(s) for s in spec.stencils}
    if len(sizes) != 1:
        raise ValueError("ground-state search requires uniform coordination")
    return sizes.pop()


# ---------------------------------------------------------------------------
# exact search, N <= 10


def exact_ground_state(spec: LatticeSpec, n_atoms: int) -> tuple[Configuration, float]:
    """Provably minimal energy over connected N-atom configurations.

    Enumerates connected subsets up to lattice translation (each class
    once, rooted at its lexicographically smallest site) with an
    admissible bound: bonds gained by r more atoms never exceed the best
    r-atom bond count plus the r largest adjacencies available on the
    current shell.  Disconnected configurations are never optimal, since
    translating one component to touch another strictly adds bonds.
    """
    if not 1 <= n_atoms <= _EXACT_N_MAX:
        raise ValueError(f"exact search supports 1 <= N <= {_EXACT_N_MAX}")
    coord = _uniform_coordination(spec)
    packed = _Packed(spec)

    best_bonds, witness = _max_bond_table(packed, n_atoms)
    config = Configuration(
        spec=spec, sites=frozenset(_canonical(packed, witness)), epsilon=1.0
    )
    return config, float(coord * n_atoms - 2 * best_bonds[n_atoms])


def _canonical(packed: _Packed, keys: Sequence[int]) -> list[SiteId]:
    sites = [packed.unpack(k) for k in keys]
    base = min(sites).cell
    return [
        SiteId((c[0] - base[0], c[1] - base[1], c[2] - base[2]), s) for c, s in sites
    ]


def _max_bond_table(packed: _Packed, n_target: int) -> tuple[list[int], list[int]]:
    """Max bond counts B[1..n] with a witness for n = n_target."""
    best: list[int] = [0, 0] + [-1] * (n_target - 1)
    witness: list[int] = []

    for n in range(2, n_target + 1):
        found_bonds = -1
        found: list[int] = []

        # greedy seed: extend the previous witness by the best shell site
        if n == 2:
            seed = [packed.pack(SiteId((0, 0, 0), 0))]
        else:
            seed = list(found_prev)
        seed_set = set(seed)
        shell: dict[int, int] = {}
        for k in seed:
            for nb in packed.neighbors(k):
                if nb not in seed_set:
                    shell[nb] = shell.get(nb, 0) + 1
        grow = max(sorted(shell), key=lambda k: shell[k])
        seed.append(grow)
        found_bonds = _bonds_of(packed, seed)
        found = list(seed)

        for root_sub in range(packed.nsub):
            root = packed.pack(SiteId((0, 0, 0), root_sub))
            b, w = _search_from_root(packed, root, n, best, found_bonds)
            if b > found_bonds:
                found_bonds, found = b, w
        best[n] = found_bonds
        found_prev = found
        if n == n_target:
            witness = found
    if n_target == 1:
        witness = [packed.pack(SiteId((0, 0, 0), 0))]
    return best, witness


def _bonds_of(packed: _Packed, keys: Sequence[int]) -> int:
    s = set(keys)
    return sum(1 for k in keys for nb in packed.neighbors(k) if nb in s) // 2


def _search_from_root(
    packed: _Packed,
    root: int,
    n_target: int,
    btable: Sequence[int],
    initial_best: int,
) -> tuple[int, list[int]]:
    best_bonds = initial_best
    best_sites: list[int] = []

    chosen = [root]
    chosen_set = {root}
    # adjacency of vacant shell sites to the chosen set
    shell: dict[int, int] = {}
    for nb in packed.neighbors(root):
        if nb > root:
            shell[nb] = 1

    def bound_ok(bonds: int, remaining: int) -> bool:
        if remaining == 0:
            return bonds > best_bonds
        top = sorted(shell.values(), reverse=True)[:remaining]
        cross = sum(top)
        size = len(chosen)
        valence = sum(min(packed.coordination(root), size + i) for i in range(remaining))
        return bonds + min(btable[remaining] + cross, valence) > best_bonds

    reached = {root} | set(shell)

    def rec(frontier: list[int], bonds: int) -> None:
        nonlocal best_bonds, best_sites
        for i, c in enumerate(frontier):
            removed = shell.pop(c)
            new_bonds = bonds + removed

            chosen.append(c)
            chosen_set.add(c)
            added: list[int] = []
            for nb in packed.neighbors(c):
                if nb > root and nb not in chosen_set:
                    if nb in shell:
                        shell[nb] += 1
                    elif nb in reached:
                        pass  # excluded earlier on this path
                    else:
                        shell[nb] = 1
                        added.append(nb)
            reached.update(added)

            if len(chosen) == n_target:
                if new_bonds > best_bonds:
                    best_bonds = new_bonds
                    best_sites = list(chosen)
            elif bound_ok(new_bonds, n_target - len(chosen)):
                rec(frontier[i + 1 :] + added, new_bonds)

            # undo
            for nb in added:
                del shell[nb]
                reached.discard(nb)
            for nb in packed.neighbors(c):
                if nb in shell and nb not in added:
                    shell[nb] -= 1
            shell[c] = removed
            chosen_set.discard(c)
            chosen.pop()

    rec(sorted(shell), 0)
    return best_bonds, best_sites


# ---------------------------------------------------------------------------
# simulated annealing


@dataclass(frozen=True)
class AnnealSchedule:
    """Geometric cooling schedule for boundary-relocation moves."""

    sweeps: int = 80
    moves_per_sweep: int | None = None  # default 3 * N
    t_start: float = 1.6
    t_end: float = 0.02
    seed: int = 0


@dataclass(frozen=True)
class AnnealResult:
    config: Configuration
    energy: float
    n_moves: int
    n_accepted: int
    seed: int


def anneal_ground_state(
    spec: LatticeSpec,
    n_atoms: int,
    schedule: AnnealSchedule | None = None,
    start: Configuration | None = None,
    polish: bool = True,
    seed_shape: str = "auto",
) -> AnnealResult:
    """Heuristic energy minimization by relocating boundary atoms.

    A move takes an atom with at least one vacant neighbor and drops it
    on a vacant site adjacent to a randomly chosen atom, accepted by the
    Metropolis rule.  The best configuration ever visited is kept and,
    unless polish is disabled, finished by a deterministic descent that
    relocates low-coordination atoms to the best frontier vacancies
    while the bond count strictly improves.  The result never falls
    behind the seed.

    ``seed_shape`` picks the seed when no start is given: "ball" cuts a
    round cluster, "wulff" cuts the equilibrium shape, and "auto" uses
    the equilibrium cut when the lattice has a known density and the
    cluster is large enough for shape to matter.
    """
    if n_atoms < 1:
        raise ValueError("need at least one atom")
    schedule = schedule or AnnealSchedule()
    coord = _uniform_coordination(spec)
    packed = _Packed(spec)
    rng = random.Random(schedule.seed)

    if start is None:
        if seed_shape == "auto":
            seed_shape = "wulff" if spec.name in ("fcc", "hcp") and n_atoms >= 24 else "ball"
        if seed_shape == "wulff":
            start = wulff_configuration(spec, n_atoms)
        elif seed_shape == "ball":
            start = ball_configuration(spec, n_atoms)
        else:
            raise ValueError(f"unknown seed shape {seed_shape!r}")
    elif start.n_atoms != n_atoms:
        raise ValueError("start configuration has wrong atom count")

    occupied = {packed.pack(s) for s in start.sites}
    atoms = list(occupied)
    index = {k: i for i, k in enumerate(atoms)}
    deg = {}
    for k in occupied:
        deg[k] = sum(1 for nb in packed.neighbors(k) if nb in occupied)
    bonds = sum(deg.values()) // 2

    def total_energy(b: int) -> int:
        return coord * n_atoms - 2 * b

    best_bonds = bonds
    best_snapshot = set(occupied)

    moves = schedule.moves_per_sweep or 3 * n_atoms
    n_acc = 0
    n_moves = schedule.sweeps * moves
    for sweep in range(schedule.sweeps):
        if schedule.sweeps == 1:
            t = schedule.t_end
        else:
            frac = sweep / (schedule.sweeps - 1)
            t = schedule.t_start * (schedule.t_end / schedule.t_start) ** frac
        for _ in range(moves):
            # source: an atom with a vacant neighbor
            for _ in range(64):
                p = atoms[rng.randrange(n_atoms)]
                if deg[p] < coord:
                    break
            else:
                continue
            # target: vacant neighbor of a random atom; interior anchors
            # have none, so retry instead of wasting the move
            for _ in range(64):
                anchor = atoms[rng.randrange(n_atoms)]
                vac = [nb for nb in packed.neighbors(anchor) if nb not in occupied]
                if vac:
                    break
            else:
                continue
            q = vac[rng.randrange(len(vac))]
            gain = sum(1 for nb in packed.neighbors(q) if nb in occupied)
            adj_pq = 1 if (q - p) in packed.deltas[p % packed.nsub] else 0
            delta_bonds = (gain - adj_pq) - deg[p]
            delta_e = -2 * delta_bonds
            if delta_e > 0 and rng.random() >= math.exp(-delta_e / t):
                continue

            # apply: remove p, insert q
            occupied.discard(p)
            for nb in packed.neighbors(p):
                if nb in occupied:
                    deg[nb] -= 1
            del deg[p]
            occupied.add(q)
            g = 0
            for nb in packed.neighbors(q):
                if nb in occupied:
                    deg[nb] += 1
                    g += 1
            deg[q] = g
            i = index.pop(p)
            atoms[i] = q
            index[q] = i
            bonds += delta_bonds
            n_acc += 1
            if bonds > best_bonds:
                best_bonds = bonds
                best_snapshot = set(occupied)

    if polish:
        best_bonds += _greedy_polish(packed, best_snapshot, coord)

    sites = frozenset(packed.unpack(k) for k in best_snapshot)
    config = Configuration(spec=spec, sites=sites, epsilon=1.0)
    return AnnealResult(
        config=config,
        energy=float(total_energy(best_bonds)),
        n_moves=n_moves,
        n_accepted=n_acc,
        seed=schedule.seed,
    )


def _greedy_polish(packed: _Packed, occupied: set[int], coord: int) -> int:
    """Strictly bond-increasing relocations; returns total bonds gained.

    Each step moves a lowest-coordination atom to the frontier vacancy
    with the largest effective gain.  Gains are integers >= 1, so the
    loop terminates.
    """
    deg = {k: sum(1 for nb in packed.neighbors(k) if nb in occupied) for k in occupied}
    vdeg: dict[int, int] = {}
    for k in occupied:
        for nb in packed.neighbors(k):
            if nb not in occupied:
                vdeg[nb] = vdeg.get(nb, 0) + 1

    gained = 0
    improved = True
    passes = 0
    while improved and passes < 50:
        improved = False
        passes += 1
        surface = sorted((k for k in occupied if deg[k] < coord), key=lambda k: (deg[k], k))
        ranked = sorted(vdeg.items(), key=lambda kv: (-kv[1], kv[0]))
        for p in surface:
            if p not in occupied or deg[p] >= coord:
                continue  # moved or filled up since the snapshot
            adj_p = {p + d for d in packed.deltas[p % packed.nsub]}
            best_gain, best_q = 0, None
            for q, vd in ranked:
                if q in occupied or vd != vdeg.get(q):
                    continue  # stale entry from an earlier move this pass
                g = vd - (1 if q in adj_p else 0) - deg[p]
                if g > best_gain:
                    best_gain, best_q = g, q
                if vd - deg[p] <= best_gain:
                    break  # ranked desc: no later entry can beat this
            if best_q is None or best_gain <= 0:
                continue
            q = best_q
            # remove p
            occupied.discard(p)
            del deg[p]
            pdeg = 0
            for nb in packed.neighbors(p):
                if nb in occupied:
                    deg[nb] -= 1
                    pdeg += 1
                elif nb in vdeg:
                    vdeg[nb] -= 1
                    if vdeg[nb] == 0:
                        del vdeg[nb]
            if pdeg:
                vdeg[p] = pdeg
            # insert q
            occupied.add(q)
            vdeg.pop(q, None)
            g = 0
            for nb in packed.neighbors(q):
                if nb in occupied:
                    deg[nb] += 1
                    g += 1
                else:
                    vdeg[nb] = vdeg.get(nb, 0) + 1
            deg[q] = g
            gained += g - pdeg
            improved = True
    return gained


# ---------------------------------------------------------------------------
# equilibrium-shape cuts


def _cut_centers(spec: LatticeSpec) -> list[np.ndarray]:
    """Candidate cut centers: cell corner, bond/edge midpoints, deep holes.

    Which center makes a finite cut close perfectly depends on the atom
    count, so all of them are tried and the cheapest cut wins.
    """
    b1, b2, b3 = spec.basis
    centers = [
        np.zeros(3),
        b1 / 2,
        (b1 + b2) / 2,
        (b1 + b2 + b3) / 2,
        (b1 + b2 + b3) / 4,
        (b1 + b2) / 3,
    ]
    # midpoints between sublattice representatives (bond centers)
    for j in range(1, spec.n_sublattices):
        centers.append((spec.offsets[0] + spec.offsets[j]) / 2)
    uniq: list[np.ndarray] = []
    for c in centers:
        if not any(np.allclose(c, u, atol=1e-12) for u in uniq):
            uniq.append(c)
    return uniq


def wulff_configuration(
    spec: LatticeSpec,
    n_atoms: int,
    density: PolyhedralDensity | None = None,
) -> Configuration:
    """Lowest-energy cut of the equilibrium crystal shape with n_atoms sites.

    Sites are ranked by the gauge of the Wulff body (computed from the
    polar vertices) around each candidate center, ties broken by cell
    order, and the cut with the most bonds over all centers is returned.
    At commensurate sizes this closes every shell and is already optimal;
    elsewhere it is a strong annealing seed.
    """
    from .convex import polar
    from .wulff import named_density, wulff_shape

    if n_atoms < 1:
        raise ValueError("need at least one atom")
    if density is None:
        density = named_density(spec.name)

    body = wulff_shape(density)
    gauge_pts = polar(body).vertices
    rho = density_rho(spec)
    lam = (n_atoms / (rho * body.volume)) ** (1.0 / 3.0)
    reach = lam * float(np.abs(body.vertices).max())
    packed = _Packed(spec)

    best_keys: list[int] | None = None
    best_bonds = -1
    for center in _cut_centers(spec):
        radius = 1.15 * reach + 2.0 + float(np.linalg.norm(center))
        cells, subs, pos = enumerate_site_arrays(spec, Ball(center, radius))
        if len(cells) < n_atoms:
            raise RuntimeError("cut enumeration window too small")
        gauge = ((pos - center) @ gauge_pts.T).max(axis=1)
        order = np.lexsort(
            (subs, cells[:, 2], cells[:, 1], cells[:, 0], np.round(gauge, 9))
        )[:n_atoms]
        keys = [
            packed.pack(SiteId((int(cells[i, 0]), int(cells[i, 1]), int(cells[i, 2])), int(subs[i])))
            for i in order
        ]
        bonds = _bonds_of(packed, keys)
        if bonds > best_bonds:
            best_bonds = bonds
            best_keys = keys
    assert best_keys is not None
    return Configuration(spec=spec, sites=frozenset(_canonical(packed, best_keys)), epsilon=1.0)


# ---------------------------------------------------------------------------
# nucleation center and shape deviation


def nucleation_center(config: Configuration, radius: float | None = None) -> np.ndarray:
    """Translation on the epsilon-cell grid whose ball captures most atoms.

    Scans tau = epsilon * (integer cell combination) over the bounding
    box of the configuration and maximizes the number of atoms within
    the given radius (default: half the nominal cluster radius); ties go
    to the lexicographically smallest cell.
    """
    from scipy.spatial import cKDTree

    if config.n_atoms == 0:
        raise ValueError("empty configuration")
    spec = config.spec
    eps = config.epsilon
    pts = config.positions()
    if radius is None:
        nominal = (3.0 * config.n_atoms / (4.0 * math.pi * density_rho(spec))) ** (1.0 / 3.0)
        radius = eps * nominal / 2.0

    Minv = np.linalg.inv(spec.matrix)
    frac = (pts / eps) @ Minv.T
    lo = np.floor(frac.min(axis=0)).astype(int)
    hi = np.ceil(frac.max(axis=0)).astype(int)
    axes = [np.arange(lo[k], hi[k] + 1) for k in range(3)]
    cells = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, 3)
    # meshgrid(indexing="ij") emits cells in lexicographic order
    taus = eps * (cells.astype(float) @ spec.basis)

    tree = cKDTree(pts)
    counts = tree.query_ball_point(taus, r=radius + 1e-12, return_length=True)
    return taus[int(np.argmax(counts))].copy()


@dataclass(frozen=True)
class ShapeDeviation:
    """Monte Carlo symmetric difference against the mass-matched Wulff body."""

    symdiff: float          # |union XOR (tau + W)| / |W|
    translation: np.ndarray
    epsilon: float
    n_samples: int
    seed: int


def shape_deviation(
    config: Configuration,
    density: PolyhedralDensity | None = None,
    n_samples: int = 100_000,
    seed: int = 0,
    refine_steps: int = 40,
) -> ShapeDeviation:
    """Volume of the symmetric difference between cluster and Wulff shape.

    The cluster is rescaled to epsilon = N^(-1/3), so its Voronoi union
    has volume 1/rho, and compared with the Wulff body scaled to the same
    volume.  Membership of a sample point in the union is decided by the
    occupancy of its nearest lattice site.  The Wulff translate starts at
    the nucleation center and descends over the epsilon grid; all
    candidates are scored on common sample points, so the search is
    deterministic.
    """
    from .convex import polar
    from .wulff import named_density, wulff_shape

    spec = config.spec
    n = config.n_atoms
    if n == 0:
        raise ValueError("empty configuration")
    if density is None:
        density = named_density(spec.name)

    eps = n ** (-1.0 / 3.0)
    work = Configuration(spec=spec, sites=config.sites, epsilon=eps)
    rho = density_rho(spec)
    target_vol = n * eps ** 3 / rho  # = 1/rho

    body = wulff_shape(density)
    lam = (target_vol / body.volume) ** (1.0 / 3.0)
    gauge_verts = polar(body).vertices  # gauge(x) = max <x, v>
    body_reach = lam * float(np.max(np.linalg.norm(body.vertices, axis=1)))

    pts = work.positions()
    lo = pts.min(axis=0) - body_reach
    hi = pts.max(axis=0) + body_reach
    box_vol = float(np.prod(hi - lo))

    rng = np.random.default_rng(seed)
    samples = rng.uniform(lo, hi, size=(n_samples, 3))

    in_union = _nearest_site_occupied(work, samples)

    def symdiff_at(tau: np.ndarray) -> float:
        g = np.max((samples - tau) @ gauge_verts.T, axis=1)
        in_body = g <= lam
        return box_vol * float(np.mean(in_union != in_body)) / target_vol

    tau = nucleation_center(work)
    best = symdiff_at(tau)
    steps = [eps * spec.basis[i] * s for i in range(3) for s in (1.0, -1.0)]
    evals = 0
    improved = True
    while improved and evals < refine_steps:
        improved = False
        for step in steps:
            cand = tau + step
            val = symdiff_at(cand)
            evals += 1
            if val < best - 1e-12:
                tau, best, improved = cand, val, True
                break
    return ShapeDeviation(
        symdiff=best,
        translation=tau,
        epsilon=eps,
        n_samples=n_samples,
        seed=seed,
    )


def _nearest_site_occupied(config: Configuration, samples: np.ndarray) -> np.ndarray:
    """For each sample point, whether the nearest lattice site is occupied."""
    spec = config.spec
    eps = config.epsilon
    Minv = np.linalg.inv(spec.matrix)
    n = len(samples)

    best_d = np.full(n, np.inf)
    best_cell = np.zeros((n, 3), dtype=np.int64)
    best_sub = np.zeros(n, dtype=np.int64)
    corners = np.array(list(np.ndindex(2, 2, 2)), dtype=np.int64)

    for sub in range(spec.n_sublattices):
        frac = (samples / eps - spec.offsets[sub]) @ Minv.T
        base = np.floor(frac).astype(np.int64)
        for corner in corners:
            cells = base + corner
            pos = eps * (cells.astype(float) @ spec.basis + spec.offsets[sub])
            d = np.linalg.norm(pos - samples, axis=1)
            closer = d < best_d
            best_d[closer] = d[closer]
            best_cell[closer] = cells[closer]
            best_sub[closer] = sub

    occ = config.sites
    out = np.zeros(n, dtype=bool)
    for i in range(n):
        site = SiteId((int(best_cell[i, 0]), int(best_cell[i, 1]), int(best_cell[i, 2])), int(best_sub[i]))
        out[i] = site in occ
    return out


# ---------------------------------------------------------------------------
# scaling curves


def excess_energy_limit(spec: LatticeSpec, density: PolyhedralDensity | None = None) -> float:
    """Macroscopic limit of the excess energy of minimizers.

    The minimum anisotropic perimeter at enclosed volume v is m * v^(2/3)
    with m the Wulff quotient; minimizers occupy volume 1/rho per unit
    mass, giving the limit m * rho^(-2/3).
    """
    if spec.name == "fcc" and density is None:
        m = M_FCC
    elif spec.name == "hcp" and density is None:
        m = M_HCP
    else:
        if density is None:
            raise ValueError("a density is required for lattices without closed forms")
        report, _ = wulff_report(density)
        m = report.quotient
    return m * density_rho(spec) ** (-2.0 / 3.0)


@dataclass(frozen=True)
class ScalingRow:
    n_atoms: int
    energies: tuple[float, ...]   # per seed
    best_energy: float
    median_excess: float
    best_excess: float
    limit: float

    @property
    def ratio(self) -> float:
        return self.median_excess / self.limit


def scaling_curve(
    spec: LatticeSpec,
    sizes: Sequence[int],
    n_seeds: int = 5,
    schedule: AnnealSchedule | None = None,
    base_seed: int = 0,
    density: PolyhedralDensity | None = None,
    seed_shape: str = "auto",
) -> list[ScalingRow]:
    """Annealed excess energies across cluster sizes, against the limit."""
    base = schedule or AnnealSchedule()
    limit = excess_energy_limit(spec, density)
    rows = []
    for n in sizes:
        energies = []
        for s in range(n_seeds):
            sched = AnnealSchedule(
                sweeps=base.sweeps,
                moves_per_sweep=base.moves_per_sweep,
                t_start=base.t_start,
                t_end=base.t_end,
                seed=base_seed + s,
            )
            energies.append(
                anneal_ground_state(spec, n, sched, seed_shape=seed_shape).energy
            )
        energies_arr = np.asarray(energies)
        scale = n ** (-2.0 / 3.0)
        rows.append(
            ScalingRow(
                n_atoms=n,
                energies=tuple(float(e) for e in energies),
                best_energy=float(energies_arr.min()),
                median_excess=float(np.median(energies_arr) * scale),
                best_excess=float(energies_arr.min() * scale),
                limit=limit,
            )
        )
    return rows
