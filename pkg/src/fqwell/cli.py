"""Command-line surface: spectrum, wavefunction, plotdata, sweep and compare.

Configuration comes from a JSON document (--config PATH, '-' for stdin),
from flags, or both; flags win field by field.  Results go to stdout (or
--output FILE) as JSON or CSV with pinned float formatting, so identical
configurations produce byte-identical output.  --figure PATH additionally
renders a matplotlib figure of the command's data.

Exit codes: 0 success, 2 configuration error, 3 domain error (e.g. a level
index past the spectrum), 4 internal solver failure.
"""

import argparse
import json
import sys
from dataclasses import dataclass

import numpy as np

from .core import (
    ConvergenceError,
    DimensionlessWell,
    DomainError,
    EigenSolveError,
    WellParameters,
    nondimensionalize,
)
from .output import dumps_csv, dumps_json
from .spectral import SpectralGrid, compare
from .spectrum import (
    HALF_PI,
    constraint_eta,
    iter_branches,
    parity_curve,
    solve_spectrum,
    solve_spectrum_raw,
)
from .wavefunction import match_constants

SCHEMA = "fqwell/1"

_DEFAULT_SAMPLES = 601
_DEFAULT_CURVE_POINTS = 200
_DEFAULT_GRID_N = 1024


class ConfigError(Exception):
    """Bad or inconsistent configuration; maps to exit code 2."""


class CommandDomainError(Exception):
    """Valid configuration asking for something the well does not have; exit 3."""


_CONFIG_FIELDS = {
    "mode": str,
    "g": float,
    "alpha": float,
    "a": float,
    "depth": float,
    "d_alpha": float,
    "hbar": float,
    "format": str,
    "level": int,
    "samples": int,
    "xmin": float,
    "xmax": float,
    "sweep_var": str,
    "from": float,
    "to": float,
    "steps": int,
    "grid_n": int,
    "grid_l": float,
    "figure": str,
    "output": str,
}


@dataclass
class JobConfig:
    mode: str | None = None
    g: float | None = None
    alpha: float | None = None
    a: float | None = None
    depth: float | None = None
    d_alpha: float | None = None
    hbar: float | None = None
    format: str = "json"
    level: int | None = None
    samples: int | None = None
    xmin: float | None = None
    xmax: float | None = None
    sweep_var: str | None = None
    sweep_from: float | None = None
    sweep_to: float | None = None
    steps: int | None = None
    grid_n: int | None = None
    grid_l: float | None = None
    figure: str | None = None
    output: str | None = None


def _load_config_file(path: str) -> dict:
    try:
        if path == "-":
            raw = sys.stdin.read()
        else:
            with open(path, "r", encoding="utf-8") as fh:
                raw = fh.read()
    except OSError as exc:
        raise ConfigError(f"cannot read config: {exc}") from exc
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ConfigError("config must be a JSON object")
    for key, value in doc.items():
        if key not in _CONFIG_FIELDS:
            raise ConfigError(f"unknown config field {key!r}")
        want = _CONFIG_FIELDS[key]
        if value is None:
            continue
        if want is float:
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise ConfigError(f"config field {key!r} must be a number")
        elif want is int:
            if isinstance(value, bool) or not isinstance(value, int):
                raise ConfigError(f"config field {key!r} must be an integer")
        elif not isinstance(value, want):
            raise ConfigError(f"config field {key!r} must be a {want.__name__}")
    return doc


def _merge_config(args: argparse.Namespace) -> JobConfig:
    doc = _load_config_file(args.config) if args.config else {}
    cfg = JobConfig()
    renames = {"from": "sweep_from", "to": "sweep_to"}
    for key, value in doc.items():
        if value is None:
            continue
        attr = renames.get(key, key)
        setattr(cfg, attr, float(value) if _CONFIG_FIELDS[key] is float else value)
    for attr in (
        "mode", "g", "alpha", "a", "depth", "d_alpha", "hbar", "format",
        "level", "samples", "xmin", "xmax", "sweep_var", "sweep_from",
        "sweep_to", "steps", "grid_n", "grid_l", "figure", "output",
    ):
        value = getattr(args, attr, None)
        if value is not None:
            setattr(cfg, attr, value)
    if cfg.format not in ("json", "csv"):
        raise ConfigError(f"format must be 'json' or 'csv', got {cfg.format!r}")
    return cfg


def _resolve_well(cfg: JobConfig) -> tuple[DimensionlessWell, WellParameters | None]:
    physical_given = [
        name
        for name in ("a", "depth", "d_alpha", "hbar")
        if getattr(cfg, name) is not None
    ]
    mode = cfg.mode
    if mode is None:
        mode = "physical" if physical_given else "dimensionless"
    if mode not in ("dimensionless", "physical"):
        raise ConfigError(f"mode must be 'dimensionless' or 'physical', got {mode!r}")
    if cfg.alpha is None:
        raise ConfigError("alpha is required")
    try:
        if mode == "dimensionless":
            if physical_given:
                raise ConfigError(
                    f"dimensionless mode forbids physical field {physical_given[0]!r}"
                )
            if cfg.g is None:
                raise ConfigError("dimensionless mode requires g")
            well = DimensionlessWell(g=cfg.g, alpha=cfg.alpha)
            return well, None
        if cfg.g is not None:
            raise ConfigError("physical mode forbids g (it is derived)")
        missing = [
            name
            for name in ("a", "depth", "d_alpha", "hbar")
            if getattr(cfg, name) is None
        ]
        if missing:
            raise ConfigError(f"physical mode requires {missing[0]!r}")
        params = WellParameters(
            a=cfg.a, depth=cfg.depth, d_alpha=cfg.d_alpha, hbar=cfg.hbar, alpha=cfg.alpha
        )
        return nondimensionalize(params), params
    except DomainError as exc:
        raise ConfigError(str(exc)) from exc
    except OverflowError as exc:
        raise ConfigError(str(exc)) from exc


def _level_rows(spectrum, w, params):
    rows = []
    for lv in spectrum.levels:
        row = {
            "index": lv.index,
            "parity": lv.parity.value,
            "sigma": lv.sigma,
            "eta": lv.eta,
            "energy_over_depth": float(np.power(lv.sigma, w.alpha) / w.g),
        }
        if params is not None:
            row["energy"] = lv.energy
        rows.append(row)
    return rows


def _well_header(w, params):
    doc = {
        "mode": "physical" if params is not None else "dimensionless",
        "alpha": w.alpha,
        "g": w.g,
        "sigma_max": w.sigma_max,
    }
    if params is not None:
        doc["physical"] = {
            "a": params.a,
            "depth": params.depth,
            "d_alpha": params.d_alpha,
            "hbar": params.hbar,
        }
    return doc


def cmd_spectrum(cfg: JobConfig):
    w, params = _resolve_well(cfg)
    spectrum = solve_spectrum(params if params is not None else w)
    rows = _level_rows(spectrum, w, params)
    if cfg.format == "json":
        doc = {"schema": SCHEMA, "command": "spectrum"}
        doc.update(_well_header(w, params))
        doc["count"] = len(rows)
        doc["levels"] = rows
        text = dumps_json(doc)
    else:
        header = ["index", "parity", "sigma", "eta", "energy_over_depth"]
        if params is not None:
            header.append("energy")
        text = dumps_csv(header, [[r.get(h) for h in header] for r in rows])

    def figure(path):
        from . import plotting

        plotting.save_spectrum_figure(rows, path)

    return text, figure


def cmd_wavefunction(cfg: JobConfig):
    w, params = _resolve_well(cfg)
    spectrum = solve_spectrum(params if params is not None else w)
    n = cfg.level if cfg.level is not None else 0
    if not 0 <= n < len(spectrum.levels):
        raise CommandDomainError(
            f"level {n} out of range: spectrum has {len(spectrum.levels)} levels"
        )
    half_width = params.a if params is not None else 1.0
    fn = match_constants(spectrum.levels[n], half_width).normalized()
    x_min = cfg.xmin if cfg.xmin is not None else -3.0 * half_width
    x_max = cfg.xmax if cfg.xmax is not None else 3.0 * half_width
    n_samples = cfg.samples if cfg.samples is not None else _DEFAULT_SAMPLES
    try:
        xs, values = fn.sample(x_min, x_max, n_samples)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    lv = spectrum.levels[n]
    if cfg.format == "json":
        doc = {"schema": SCHEMA, "command": "wavefunction"}
        doc.update(_well_header(w, params))
        doc["level"] = _level_rows(spectrum, w, params)[n]
        doc["half_width"] = half_width
        doc["samples"] = [[float(x), float(v)] for x, v in zip(xs, values)]
        text = dumps_json(doc)
    else:
        text = dumps_csv(["x", "phi"], [[float(x), float(v)] for x, v in zip(xs, values)])

    def figure(path):
        from . import plotting

        plotting.save_wavefunction_figure(xs, values, lv.index, half_width, path)

    return text, figure


def build_plot_data(w: DimensionlessWell, n_curve: int = _DEFAULT_CURVE_POINTS) -> dict:
    """Curve tables behind the graphical solution, plus solver root markers.

    Parity-curve samples keep a margin of at least 1e-9 (and a few ulps)
    away from every tan/cot pole.
    """
    if n_curve < 2:
        raise ConfigError(f"samples must be at least 2, got {n_curve!r}")
    smax = w.sigma_max
    even_curve, odd_curve = [], []
    for br in iter_branches(w):
        pole = (br.level_index + 1) * HALF_PI
        margin = max(1e-9, 32.0 * float(np.spacing(pole)))
        start = br.lo if br.lo == 0.0 else br.lo + margin
        end = min(pole - margin, smax)
        if end <= start:
            continue
        sig = np.linspace(start, end, n_curve)
        eta = parity_curve(br.parity, sig)
        entry = {"n": br.n, "sigma": sig.tolist(), "eta": eta.tolist()}
        (even_curve if br.level_index % 2 == 0 else odd_curve).append(entry)
    con_sig = np.linspace(0.0, smax, 2 * n_curve)
    con_eta = constraint_eta(w, con_sig)
    spectrum = solve_spectrum(w)
    roots = [
        {"index": lv.index, "parity": lv.parity.value, "sigma": lv.sigma, "eta": lv.eta}
        for lv in spectrum.levels
    ]
    return {
        "alpha": w.alpha,
        "g": w.g,
        "sigma_max": smax,
        "even_curve": even_curve,
        "odd_curve": odd_curve,
        "constraint_curve": {"sigma": con_sig.tolist(), "eta": con_eta.tolist()},
        "roots": roots,
    }


def cmd_plotdata(cfg: JobConfig):
    w, params = _resolve_well(cfg)
    data = build_plot_data(w, cfg.samples if cfg.samples is not None else _DEFAULT_CURVE_POINTS)
    if cfg.format == "json":
        doc = {"schema": SCHEMA, "command": "plotdata"}
        doc.update(data)
        text = dumps_json(doc)
    else:
        rows = []
        for series, curves in (("even", data["even_curve"]), ("odd", data["odd_curve"])):
            for br in curves:
                rows.extend(
                    [series, br["n"], s, e] for s, e in zip(br["sigma"], br["eta"])
                )
        con = data["constraint_curve"]
        rows.extend(["constraint", None, s, e] for s, e in zip(con["sigma"], con["eta"]))
        rows.extend(["root", r["index"], r["sigma"], r["eta"]] for r in data["roots"])
        text = dumps_csv(["series", "branch", "sigma", "eta"], rows)

    def figure(path):
        from . import plotting

        plotting.save_intersection_figure(data, path)

    return text, figure


def cmd_sweep(cfg: JobConfig):
    if cfg.sweep_var not in ("alpha", "g"):
        raise ConfigError(f"sweep_var must be 'alpha' or 'g', got {cfg.sweep_var!r}")
    if cfg.sweep_from is None or cfg.sweep_to is None:
        raise ConfigError("sweep requires 'from' and 'to'")
    if cfg.steps is None or cfg.steps < 2:
        raise ConfigError(f"steps must be at least 2, got {cfg.steps!r}")
    if cfg.mode == "physical" or cfg.a is not None:
        raise ConfigError("sweep runs in dimensionless mode (g, alpha)")
    if cfg.sweep_var == "alpha":
        if cfg.g is None:
            raise ConfigError("alpha sweep requires a fixed g")
        for name, v in (("from", cfg.sweep_from), ("to", cfg.sweep_to)):
            if not 1.0 < v <= 2.0:
                raise ConfigError(f"alpha sweep bound {name!r} must lie in (1, 2], got {v!r}")
    else:
        if cfg.alpha is None:
            raise ConfigError("g sweep requires a fixed alpha")
        for name, v in (("from", cfg.sweep_from), ("to", cfg.sweep_to)):
            if not v > 0.0:
                raise ConfigError(f"g sweep bound {name!r} must be positive, got {v!r}")
    values = np.linspace(cfg.sweep_from, cfg.sweep_to, cfg.steps)
    rows = []
    for v in values:
        try:
            if cfg.sweep_var == "alpha":
                w = DimensionlessWell(g=cfg.g, alpha=float(v))
            else:
                w = DimensionlessWell(g=float(v), alpha=cfg.alpha)
        except DomainError as exc:
            raise ConfigError(str(exc)) from exc
        sig, _eta = solve_spectrum_raw(w)
        ratios = np.power(sig, w.alpha) / w.g
        rows.append(
            {
                "alpha": w.alpha,
                "g": w.g,
                "sigma_max": w.sigma_max,
                "count": int(sig.size),
                "energies_over_depth": [float(r) for r in ratios],
            }
        )
    if cfg.format == "json":
        doc = {
            "schema": SCHEMA,
            "command": "sweep",
            "sweep_var": cfg.sweep_var,
            "rows": rows,
        }
        text = dumps_json(doc)
    else:
        width = max(r["count"] for r in rows)
        header = ["alpha", "g", "sigma_max", "count"] + [
            f"e{i}_over_depth" for i in range(width)
        ]
        table = []
        for r in rows:
            padded = r["energies_over_depth"] + [None] * (width - r["count"])
            table.append([r["alpha"], r["g"], r["sigma_max"], r["count"], *padded])
        text = dumps_csv(header, table)

    def figure(path):
        from . import plotting

        plotting.save_sweep_figure(rows, cfg.sweep_var, path)

    return text, figure


def cmd_compare(cfg: JobConfig):
    w, params = _resolve_well(cfg)
    if params is None:
        raise ConfigError("compare requires physical mode (a, depth, d_alpha, hbar)")
    grid_l = cfg.grid_l if cfg.grid_l is not None else 8.0 * params.a
    grid_n = cfg.grid_n if cfg.grid_n is not None else _DEFAULT_GRID_N
    if grid_l < 4.0 * params.a:
        raise ConfigError(
            f"grid_l must be at least 4*a = {4.0 * params.a!r}, got {grid_l!r}"
        )
    try:
        grid = SpectralGrid(box_half_length=grid_l, n_points=grid_n)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    report = compare(params, grid)
    doc = {"schema": SCHEMA, "command": "compare"}
    doc.update(report.to_dict())
    if cfg.format == "json":
        text = dumps_json(doc)
    else:
        header = [
            "index", "parity", "sigma", "eta", "energy",
            "oracle_energy", "abs_gap", "rel_gap",
        ]
        text = dumps_csv(header, [[lv[h] for h in header] for lv in doc["levels"]])

    def figure(path):
        from . import plotting

        plotting.save_comparison_figure(doc, path)

    return text, figure


_COMMANDS = {
    "spectrum": cmd_spectrum,
    "wavefunction": cmd_wavefunction,
    "plotdata": cmd_plotdata,
    "sweep": cmd_sweep,
    "compare": cmd_compare,
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fqwell",
        description="Bound states of a finite square well with a Levy-index kinetic term.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    descriptions = {
        "spectrum": "solve and emit all bound levels",
        "wavefunction": "emit samples of one normalized eigenfunction",
        "plotdata": "emit the intersection curves behind the graphical solution",
        "sweep": "emit level tables over a range of alpha or g",
        "compare": "cross-check the spectrum against a Fourier-grid diagonalization",
    }
    for name, desc in descriptions.items():
        sp = sub.add_parser(name, help=desc, description=desc)
        sp.add_argument("--config", help="JSON config file ('-' for stdin)")
        sp.add_argument("--mode", choices=("dimensionless", "physical"))
        sp.add_argument("--g", type=float, help="dimensionless well strength")
        sp.add_argument("--alpha", type=float, help="Levy index in (1, 2]")
        sp.add_argument("--a", type=float, help="well half-width (physical mode)")
        sp.add_argument("--depth", type=float, help="well depth U (physical mode)")
        sp.add_argument("--dalpha", dest="d_alpha", type=float,
                        help="kinetic scale factor (physical mode)")
        sp.add_argument("--hbar", type=float, help="reduced Planck constant")
        sp.add_argument("--format", choices=("json", "csv"))
        sp.add_argument("--level", type=int, help="level index (wavefunction)")
        sp.add_argument("--samples", type=int, help="sample count")
        sp.add_argument("--xmin", type=float)
        sp.add_argument("--xmax", type=float)
        sp.add_argument("--sweep-var", dest="sweep_var", choices=("alpha", "g"))
        sp.add_argument("--from", dest="sweep_from", type=float)
        sp.add_argument("--to", dest="sweep_to", type=float)
        sp.add_argument("--steps", type=int)
        sp.add_argument("--grid-n", dest="grid_n", type=int,
                        help="Fourier grid points (even, >= 16)")
        sp.add_argument("--grid-l", dest="grid_l", type=float,
                        help="Fourier box half-length (>= 4*a)")
        sp.add_argument("--figure", help="render a figure of the result to this file")
        sp.add_argument("--output", help="write the table here instead of stdout")
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        cfg = _merge_config(args)
        text, figure = _COMMANDS[args.command](cfg)
        if cfg.output:
            with open(cfg.output, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
        if cfg.figure:
            figure(cfg.figure)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except CommandDomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 3
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 3
    except (ConvergenceError, EigenSolveError) as exc:
        print(f"solver error: {exc}", file=sys.stderr)
        return 4
    return 0


def entrypoint() -> None:
    sys.exit(main())
