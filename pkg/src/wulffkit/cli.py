"""Command-line front-end.

Subcommands: phi, voronoi, wulff, compare, energy, anneal, scaling,
validate.  Stdout carries machine-readable JSON/CSV only; progress and
notes go to stderr.  Exit codes: 0 success, 1 domain error, 2 usage
error.  Floating-point values are serialized at 15 significant digits,
so identical argv and seeds give byte-identical output.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, Sequence

import numpy as np

from . import convex, lattice, surface_density, voronoi, wulff
from .discrete import Configuration, bond_count, energy
from .lattice import LatticeSpec, SiteId, density_rho, resolve_lattice

__all__ = ["main"]


class UsageError(Exception):
    """Bad flag combination detected after parsing."""


# ---------------------------------------------------------------------------
# canonical serialization


def fmt_float(x: float) -> str:
    if not math.isfinite(x):
        raise ValueError(f"non-finite value in output: {x!r}")
    return format(float(x), ".15g")


def dumps_canonical(obj, indent: int = 0) -> str:
    """JSON with floats at 15 significant digits, keys in insertion order."""
    pad = " " * indent
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        inner = ",\n".join(
            f'{pad}  {_json_str(str(k))}: {dumps_canonical(v, indent + 2)}'
            for k, v in obj.items()
        )
        return "{\n" + inner + "\n" + pad + "}"
    if isinstance(obj, (list, tuple, np.ndarray)):
        seq = list(obj)
        if not seq:
            return "[]"
        flat = all(isinstance(v, (bool, int, float, np.integer, np.floating)) for v in seq)
        parts = [dumps_canonical(v, indent + 2) for v in seq]
        if flat:
            return "[" + ", ".join(parts) + "]"
        inner = ",\n".join(pad + "  " + p for p in parts)
        return "[\n" + inner + "\n" + pad + "]"
    if isinstance(obj, bool) or isinstance(obj, np.bool_):
        return "true" if obj else "false"
    if obj is None:
        return "null"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return fmt_float(float(obj))
    if isinstance(obj, str):
        return _json_str(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _json_str(s: str) -> str:
    import json

    return json.dumps(s)


def csv_lines(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    def cell(v) -> str:
        if isinstance(v, (float, np.floating)):
            return fmt_float(float(v))
        return str(v)

    out = [",".join(header)]
    out.extend(",".join(cell(v) for v in row) for row in rows)
    return "\n".join(out) + "\n"


def _emit(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
        _progress(f"wrote {path}")


def _progress(msg: str) -> None:
    print(msg, file=sys.stderr)


def _resolve_out(tokens: Sequence[str] | None, default_format: str) -> tuple[str, str | None]:
    """--out [FORMAT] [PATH]: tokens 'json'/'csv' select format, rest is path."""
    fmt, path = default_format, None
    if tokens:
        rest = list(tokens)
        if rest and rest[0] in ("json", "csv"):
            fmt = rest.pop(0)
        if rest:
            path = rest.pop(0)
        if rest:
            raise UsageError(f"--out got unexpected argument {rest[0]!r}")
    return fmt, path


# ---------------------------------------------------------------------------
# concurrency helper


def max_workers() -> int:
    env = os.environ.get("WULFFKIT_THREADS", "").strip()
    if env:
        n = int(env)
        if n < 1:
            raise UsageError("WULFFKIT_THREADS must be >= 1")
        return n
    return min(8, os.cpu_count() or 1)


def parallel_map(fn: Callable, items: Sequence) -> list:
    """Ordered map over items, threaded unless capped to one worker."""
    items = list(items)
    workers = max_workers()
    if workers == 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(fn, items))


# ---------------------------------------------------------------------------
# shared argument handling


def _parse_nu(text: str) -> np.ndarray:
    try:
        parts = [float(p) for p in text.split(",")]
    except ValueError:
        raise UsageError(f"--nu expects x,y,z floats, got {text!r}") from None
    if len(parts) != 3:
        raise UsageError(f"--nu expects exactly three components, got {len(parts)}")
    v = np.asarray(parts)
    if not np.linalg.norm(v) > 0:
        raise UsageError("--nu must be nonzero")
    return v


def _parse_sizes(text: str) -> list[int]:
    try:
        sizes = [int(p) for p in text.split(",") if p]
    except ValueError:
        raise UsageError(f"--Ns expects comma-separated integers, got {text!r}") from None
    if not sizes or any(n < 1 for n in sizes):
        raise UsageError("--Ns entries must be positive")
    return sizes


def _named_density_or_error(spec: LatticeSpec) -> surface_density.PolyhedralDensity:
    try:
        return wulff.named_density(spec.name)
    except ValueError as exc:
        raise ValueError(f"{exc}; use --method cell or mincut for custom lattices") from None


def _export_mesh(poly: convex.Polytope, fmt: str, path: str) -> None:
    if fmt == "off":
        _emit(convex.to_off(poly), path)
    elif fmt == "obj":
        _emit(convex.to_obj(poly), path)
    else:
        raise UsageError(f"--export format must be 'off' or 'obj', got {fmt!r}")


# ---------------------------------------------------------------------------
# subcommands


def cmd_phi(args) -> int:
    spec = resolve_lattice(args.lattice)
    if args.mode == "sweep":
        return _phi_sweep(args, spec)
    if args.nu is None:
        raise UsageError("phi requires --nu x,y,z (or the 'sweep' mode)")
    nu = _parse_nu(args.nu)
    if args.method == "closed":
        value = float(_named_density_or_error(spec)(nu))
    elif args.method == "cell":
        value = surface_density.phi_cell_formula(spec, nu)
    else:
        _progress(f"min-cut window T={args.T} layer={args.layer} ...")
        value = surface_density.phi_window_mincut(
            spec, nu, T=args.T, layer=args.layer
        ).value
    out = {"lattice": spec.name, "nu": [float(x) for x in nu], "method": args.method, "value": value}
    if args.method == "mincut":
        out["T"] = args.T
        out["layer"] = args.layer
    _emit(dumps_canonical(out), args.out[0] if args.out else None)
    return 0


def _phi_sweep(args, spec: LatticeSpec) -> int:
    density = _named_density_or_error(spec)
    dirs = surface_density.direction_grid(args.grid)
    _progress(f"sweep over {len(dirs)} directions")
    values = density.evaluate(dirs)
    if spec.name == "fcc":
        polar_vals = np.array([surface_density.polar_fcc(d) for d in dirs])
    else:
        polar_vals = np.array([surface_density.polar_hcp(d) for d in dirs])
    rows = [
        (d[0], d[1], d[2], v, p) for d, v, p in zip(dirs, values, polar_vals)
    ]
    _, path = _resolve_out(args.out, "csv")
    _emit(csv_lines(("nu_x", "nu_y", "nu_z", "phi", "phi_polar"), rows), path)
    if args.plot:
        from . import plots

        plots.plot_phi_sweep(dirs, values, args.plot, polar_vals, title=f"{spec.name} density sweep")
        _progress(f"wrote {args.plot}")
    return 0


def cmd_voronoi(args) -> int:
    spec = resolve_lattice(args.lattice)
    if not 0 <= args.sub < spec.n_sublattices:
        raise ValueError(f"sublattice index {args.sub} out of range for {spec.name}")
    cell = voronoi.voronoi_cell(spec, SiteId((0, 0, 0), args.sub))
    out = {
        "lattice": spec.name,
        "sub": args.sub,
        "volume": cell.polytope.volume,
        "n_facets": len(cell.faces),
        "facets": [
            {
                "displacement": [float(x) for x in f.displacement],
                "area": f.area,
                "n_corners": len(f.corners),
            }
            for f in cell.faces
        ],
    }
    _emit(dumps_canonical(out), args.out[0] if args.out else None)
    if args.export:
        _export_mesh(cell.polytope, args.export[0], args.export[1])
    if args.plot:
        from . import plots

        plots.plot_polytope(cell.polytope, args.plot, title=f"{spec.name} Voronoi cell, sublattice {args.sub}")
        _progress(f"wrote {args.plot}")
    return 0


def _wulff_report_dict(spec: LatticeSpec) -> tuple[dict, convex.Polytope]:
    density = _named_density_or_error(spec)
    report, body = wulff.wulff_report(density)
    census = report.census
    facets = []
    for f in body.facets:
        key = (len(f.loop), round(f.area, 6))
        orbit = next(
            i
            for i, o in enumerate(census)
            if (o.sides, round(o.area, 6)) == key
        )
        facets.append(
            {
                "normal": [float(x) for x in f.normal],
                "area": f.area,
                "phi": float(census[orbit].phi),
                "orbit": orbit,
            }
        )
    out = {
        "lattice": spec.name,
        "volume": report.volume,
        "surface_integral": report.surface_integral,
        "quotient": report.quotient,
        "limit_constant": report.quotient * density_rho(spec) ** (-2.0 / 3.0),
        "facets": facets,
    }
    return out, body


def cmd_wulff(args) -> int:
    spec = resolve_lattice(args.lattice)
    out, body = _wulff_report_dict(spec)
    report_tokens = args.report if args.report is not None else ["-"]
    if report_tokens and report_tokens[0] == "json":
        report_tokens = report_tokens[1:]
    path = report_tokens[0] if report_tokens else "-"
    _emit(dumps_canonical(out), path)
    if args.export:
        _export_mesh(body, args.export[0], args.export[1])
    if args.plot:
        from . import plots

        plots.plot_polytope(body, args.plot, title=f"{spec.name} Wulff shape")
        _progress(f"wrote {args.plot}")
    return 0


def cmd_compare(args) -> int:
    out = wulff.compare_lattices()
    _, path = _resolve_out(args.out, "json")
    _emit(dumps_canonical(out), path)
    return 0


def _load_configuration(path: str, spec: LatticeSpec) -> Configuration:
    sites = set()
    with open(path, encoding="utf-8") as fh:
        for ln, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 4:
                raise ValueError(f"{path}:{ln}: expected 'cell_x cell_y cell_z sub'")
            try:
                cx, cy, cz, sub = (int(p) for p in parts)
            except ValueError:
                raise ValueError(f"{path}:{ln}: non-integer field") from None
            if not 0 <= sub < spec.n_sublattices:
                raise ValueError(f"{path}:{ln}: sublattice {sub} out of range")
            sites.add(SiteId((cx, cy, cz), sub))
    if not sites:
        raise ValueError(f"{path}: no sites")
    return Configuration(spec=spec, sites=frozenset(sites), epsilon=1.0)


def _dump_configuration(config: Configuration) -> str:
    lines = [
        f"{s.cell[0]} {s.cell[1]} {s.cell[2]} {s.sub}" for s in sorted(config.sites)
    ]
    return "\n".join(lines) + "\n"


def cmd_energy(args) -> int:
    spec = resolve_lattice(args.lattice)
    config = _load_configuration(args.config, spec)
    e = energy(config)
    out = {
        "N": config.n_atoms,
        "energy": e,
        "excess": e * config.n_atoms ** (-2.0 / 3.0),
        "bonds": bond_count(config),
    }
    _, path = _resolve_out(args.out, "json")
    _emit(dumps_canonical(out), path)
    return 0


def cmd_anneal(args) -> int:
    from . import crystallize

    spec = resolve_lattice(args.lattice)
    schedules = [
        crystallize.AnnealSchedule(sweeps=args.sweeps, seed=args.seed_base + s)
        for s in range(args.seeds)
    ]

    def run(sched):
        r = crystallize.anneal_ground_state(spec, args.N, sched, seed_shape=args.seed_shape)
        _progress(f"seed {sched.seed}: energy {fmt_float(r.energy)}")
        return r

    results = parallel_map(run, schedules)
    scale = args.N ** (-2.0 / 3.0)
    best = min(results, key=lambda r: r.energy)
    out = {
        "lattice": spec.name,
        "N": args.N,
        "sweeps": args.sweeps,
        "seeds": [
            {
                "seed": r.seed,
                "energy": r.energy,
                "excess": r.energy * scale,
                "accepted_moves": r.n_accepted,
            }
            for r in results
        ],
        "best": {"seed": best.seed, "energy": best.energy, "excess": best.energy * scale},
        "limit": crystallize.excess_energy_limit(spec)
        if spec.name in ("fcc", "hcp")
        else None,
    }
    fmt, path = _resolve_out(args.out, "json")
    if fmt == "json":
        _emit(dumps_canonical(out), path)
    else:
        rows = [(s["seed"], args.N, s["energy"], s["excess"]) for s in out["seeds"]]
        _emit(csv_lines(("seed", "N", "energy", "excess"), rows), path)
    if args.save_config:
        _emit(_dump_configuration(best.config), args.save_config)
    return 0


def cmd_scaling(args) -> int:
    from . import crystallize

    spec = resolve_lattice(args.lattice)
    sizes = _parse_sizes(args.Ns)
    sched = crystallize.AnnealSchedule(sweeps=args.sweeps)
    _progress(f"scaling curve on {spec.name}: N in {sizes}, {args.seeds} seeds")
    rows = crystallize.scaling_curve(
        spec,
        sizes,
        n_seeds=args.seeds,
        schedule=sched,
        base_seed=args.seed_base,
        seed_shape=args.seed_shape,
    )
    fmt, path = _resolve_out(args.out, "csv")
    if fmt == "csv":
        flat = []
        for r in rows:
            scale = r.n_atoms ** (-2.0 / 3.0)
            for s, e in enumerate(r.energies):
                flat.append(
                    (r.n_atoms, args.seed_base + s, e, e * scale, r.median_excess, r.best_excess, r.limit)
                )
        _emit(
            csv_lines(
                ("N", "seed", "energy", "excess", "median_excess", "best_excess", "limit"),
                flat,
            ),
            path,
        )
    else:
        out = {
            "lattice": spec.name,
            "limit": rows[0].limit if rows else None,
            "rows": [
                {
                    "N": r.n_atoms,
                    "energies": list(r.energies),
                    "median_excess": r.median_excess,
                    "best_excess": r.best_excess,
                    "ratio": r.ratio,
                }
                for r in rows
            ],
        }
        _emit(dumps_canonical(out), path)
    if args.plot:
        from . import plots

        plots.plot_scaling(rows, args.plot, title=f"{spec.name} excess energy")
        _progress(f"wrote {args.plot}")
    return 0


# ---------------------------------------------------------------------------
# validate


def _check(name: str, dev: float, tol: float) -> dict:
    ok = dev < tol
    _progress(f"{'PASS' if ok else 'FAIL'} {name}: deviation {fmt_float(dev)} (tol {fmt_float(tol)})")
    return {"name": name, "deviation": dev, "tolerance": tol, "pass": bool(ok)}


def cmd_validate(args) -> int:
    checks: list[dict] = []
    rng = np.random.default_rng(7)

    if args.lattice is None:
        specs = [lattice.make_fcc(), lattice.make_hcp()]
    else:
        specs = [resolve_lattice(args.lattice)]

    for spec in specs:
        name = spec.name
        named = name in ("fcc", "hcp")

        # Voronoi cell volumes tile the unit cell
        vol = sum(
            voronoi.voronoi_cell(spec, SiteId((0, 0, 0), s)).polytope.volume
            for s in range(spec.n_sublattices)
        )
        det = abs(float(np.linalg.det(spec.matrix)))
        checks.append(_check(f"{name}: voronoi cells tile unit cell", abs(vol - det) / det, 1e-9))

        # face-derived neighbors equal the stencil
        for s in range(spec.n_sublattices):
            got = set(voronoi.nearest_neighbors_by_face(spec, SiteId((0, 0, 0), s)))
            want = set(lattice.neighbors(spec, SiteId((0, 0, 0), s)))
            dev = float(len(got.symmetric_difference(want)))
            checks.append(_check(f"{name}: unit-distance faces = stencil (sub {s})", dev, 0.5))

        dirs = rng.normal(size=(args.n_dirs, 3))
        dirs /= np.linalg.norm(dirs, axis=1, keepdims=True)

        if named:
            density = wulff.named_density(name)
            body = wulff.wulff_shape(density)

            closed = density.evaluate(dirs)
            cellv = np.array([surface_density.phi_cell_formula(spec, d) for d in dirs])
            checks.append(
                _check(f"{name}: closed form vs cell formula", float(np.max(np.abs(closed - cellv))), 1e-9)
            )
            sup = np.array([convex.support(body, d) for d in dirs])
            checks.append(
                _check(f"{name}: closed form vs Wulff support", float(np.max(np.abs(closed - sup))), 1e-9)
            )

            closed_polar = (
                np.array([surface_density.polar_fcc(d) for d in dirs])
                if name == "fcc"
                else np.array([surface_density.polar_hcp(d) for d in dirs])
            )
            numeric_polar = np.array([surface_density.polar_numeric(density, d) for d in dirs])
            checks.append(
                _check(
                    f"{name}: closed polar vs numeric polar",
                    float(np.max(np.abs(closed_polar - numeric_polar))),
                    1e-8,
                )
            )

            per = wulff.anisotropic_perimeter(body, density)
            checks.append(
                _check(f"{name}: surface integral = 3 x volume", abs(per - 3.0 * body.volume) / per, 1e-9)
            )

            def mincut_err(d):
                r = surface_density.phi_window_mincut(spec, d, T=args.T, layer=args.layer)
                return abs(r.value - density(d)) / density(d)

            cube = surface_density.cube_directions()[: args.mincut_dirs]
            errs = parallel_map(mincut_err, list(cube))
            checks.append(
                _check(
                    f"{name}: min-cut window (T={fmt_float(args.T)}) relative error",
                    float(np.max(errs)),
                    0.25,
                )
            )
        else:
            cellv = np.array([surface_density.phi_cell_formula(spec, d) for d in dirs])
            flip = np.array([surface_density.phi_cell_formula(spec, -d) for d in dirs])
            checks.append(
                _check(f"{name}: cell formula even symmetry", float(np.max(np.abs(cellv - flip))), 1e-9)
            )

        if name == "hcp":
            zs = rng.normal(size=(1000, 3))
            zs /= np.linalg.norm(zs, axis=1, keepdims=True)
            e1, e2, e3 = spec.basis
            dev = 0.0
            for z in zs:
                got, _ = surface_density.shift_cost_min(z)
                spans = [abs(z @ e1), abs(z @ e2), abs(z @ (e1 - e2)), abs(z @ e3)]
                want = abs(z @ e3) + 2.0 * max(spans)
                dev = max(dev, abs(got - want))
            checks.append(_check("hcp: minimized shift cost identity", dev, 1e-12))

        # handshake identity on random ball slabs
        from .discrete import ball_configuration, excess_energy

        cfg = ball_configuration(spec, 64)
        e = energy(cfg)
        dev = abs(e - (spec.max_coordination * cfg.n_atoms - 2 * bond_count(cfg)))
        checks.append(_check(f"{name}: handshake identity", float(dev), 1e-9))
        _ = excess_energy(cfg)

    all_pass = all(c["pass"] for c in checks)
    out = {"checks": checks, "all_pass": all_pass}
    _, path = _resolve_out(args.out, "json")
    _emit(dumps_canonical(out), path)
    return 0 if all_pass else 1


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wulffkit",
        description="Surface energy densities, Wulff crystals, and discrete ground states "
        "of sticky-sphere lattice models.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_lattice(p, default="fcc"):
        p.add_argument(
            "--lattice",
            default=default,
            help=f"fcc | hcp | file:PATH (default {default})",
        )

    p = sub.add_parser("phi", help="evaluate the surface energy density")
    p.add_argument("mode", nargs="?", choices=["sweep"], help="'sweep' evaluates a direction grid to CSV")
    add_lattice(p)
    p.add_argument("--nu", help="direction x,y,z (point query)")
    p.add_argument(
        "--method",
        choices=["closed", "cell", "mincut"],
        default="closed",
        help="closed form (fcc/hcp), finite-cell formula, or window min-cut (default closed)",
    )
    p.add_argument("--T", type=float, default=40.0, help="min-cut window size (default 40)")
    p.add_argument("--layer", type=float, default=3.0, help="pinned boundary layer width (default 3)")
    p.add_argument("--grid", default="icosphere:2", help="sweep grid: cube26 | icosphere:k (default icosphere:2)")
    p.add_argument("--out", nargs="+", metavar="PATH", help="output path ('-' = stdout)")
    p.add_argument("--plot", metavar="PATH", help="render the sweep to an image file")
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("voronoi", help="Voronoi cell geometry of a sublattice site")
    add_lattice(p)
    p.add_argument("--sub", type=int, default=0, help="sublattice index (default 0)")
    p.add_argument("--export", nargs=2, metavar=("FORMAT", "PATH"), help="write mesh: off|obj PATH")
    p.add_argument("--out", nargs=1, metavar="PATH", help="JSON output path ('-' = stdout)")
    p.add_argument("--plot", metavar="PATH", help="render the cell to an image file")
    p.set_defaults(func=cmd_voronoi)

    p = sub.add_parser("wulff", help="construct the Wulff shape and report its geometry")
    add_lattice(p)
    p.add_argument(
        "--report",
        nargs="+",
        metavar="PATH",
        help="JSON report path, '-' = stdout (default; optional leading 'json' token accepted)",
    )
    p.add_argument("--export", nargs=2, metavar=("FORMAT", "PATH"), help="write mesh: off|obj PATH")
    p.add_argument("--plot", metavar="PATH", help="render the body to an image file")
    p.set_defaults(func=cmd_wulff)

    p = sub.add_parser("compare", help="isoperimetric comparison of fcc and hcp")
    p.add_argument("--out", nargs="+", metavar="PATH", help="output path ('-' = stdout)")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("energy", help="energy of a configuration file")
    add_lattice(p)
    p.add_argument("--config", required=True, help="line-oriented 'cell_x cell_y cell_z sub' file")
    p.add_argument("--out", nargs="+", metavar="PATH", help="output path ('-' = stdout)")
    p.set_defaults(func=cmd_energy)

    p = sub.add_parser("anneal", help="simulated annealing ground-state search")
    add_lattice(p)
    p.add_argument("--N", type=int, required=True, help="number of atoms")
    p.add_argument("--seeds", type=int, default=5, help="number of seeds (default 5)")
    p.add_argument("--seed-base", type=int, default=0, help="first seed (default 0)")
    p.add_argument("--sweeps", type=int, default=80, help="annealing sweeps (default 80)")
    p.add_argument("--seed-shape", choices=("auto", "ball", "wulff"), default="auto",
                   help="seed cut shape (default auto)")
    p.add_argument("--out", nargs="+", metavar="FORMAT/PATH", help="json|csv [PATH] (default json to stdout)")
    p.add_argument("--save-config", metavar="PATH", help="write the best configuration file")
    p.set_defaults(func=cmd_anneal)

    p = sub.add_parser("scaling", help="excess-energy scaling across cluster sizes")
    add_lattice(p)
    p.add_argument("--Ns", required=True, help="comma-separated sizes, e.g. 500,1000,2000,4000")
    p.add_argument("--seeds", type=int, default=5, help="seeds per size (default 5)")
    p.add_argument("--seed-base", type=int, default=0, help="first seed (default 0)")
    p.add_argument("--sweeps", type=int, default=80, help="annealing sweeps (default 80)")
    p.add_argument("--seed-shape", choices=("auto", "ball", "wulff"), default="auto",
                   help="seed cut shape (default auto)")
    p.add_argument("--out", nargs="+", metavar="FORMAT/PATH", help="csv|json [PATH] (default csv to stdout)")
    p.add_argument("--plot", metavar="PATH", help="render the curve to an image file")
    p.set_defaults(func=cmd_scaling)

    p = sub.add_parser("validate", help="cross-validation suite over all routes")
    p.add_argument("--lattice", default=None, help="restrict to one lattice (default: fcc and hcp)")
    p.add_argument("--T", type=float, default=10.0, help="min-cut window size (default 10)")
    p.add_argument("--layer", type=float, default=3.0, help="pinned boundary layer width (default 3)")
    p.add_argument("--n-dirs", type=int, default=50, help="random directions per check (default 50)")
    p.add_argument("--mincut-dirs", type=int, default=3, help="cube directions for the min-cut check (default 3)")
    p.add_argument("--out", nargs="+", metavar="PATH", help="output path ('-' = stdout)")
    p.set_defaults(func=cmd_validate)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError, convex.UnboundedRegionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
