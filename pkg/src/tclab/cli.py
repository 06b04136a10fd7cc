"""Command-line front end: sweeps, crossing tables and separability reports.

Every figure-style dataset the package produces comes out of one of the
subcommands below as a flat CSV/JSON file with deterministic formatting
(identical inputs give byte-identical outputs, regardless of --threads).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import asymptotics, correlations, entanglement, kernels, oracle, spectral
from .correlations import DickeMixture, reduce_to_dicke_mixture
from .model import ModelFamily

__all__ = ["SweepSpec", "main", "cmd_spectrum", "cmd_crossings", "cmd_sweep", "cmd_separability"]

OBSERVABLE_COLUMNS: dict[str, tuple[str, ...]] = {
    "energy": ("energy",),
    "kstar": ("kstar",),
    "kstar_per_M": ("kstar_per_M",),
    "qcd": ("qcd",),
    "rescaled_qcd": ("rescaled_qcd",),
    "naive_qcd": ("naive_qcd",),
    "purity": ("purity",),
    "tau_tot": ("tau_tot",),
    "concurrence": ("concurrence",),
    "ppt": ("ppt",),
    "bounds": ("bound_lower", "bound_upper"),
    "asymptotics": ("kstar_approx", "energy_approx", "qcd_approx", "rescaled_qcd_approx"),
}

# ppt is opt-in: the dense 2^M expansion is the one expensive column.
DEFAULT_OBSERVABLES = (
    "energy",
    "kstar",
    "kstar_per_M",
    "qcd",
    "rescaled_qcd",
    "naive_qcd",
    "purity",
    "tau_tot",
    "concurrence",
    "bounds",
    "asymptotics",
)

_NEEDS_MIXTURE = {
    "qcd",
    "rescaled_qcd",
    "naive_qcd",
    "purity",
    "tau_tot",
    "concurrence",
    "ppt",
    "bounds",
}


@dataclass
class SweepSpec:
    """Validated description of one sweep run."""

    M_list: list[int]
    eta: float = 10.0
    omega_c: float = 1.0
    g_min: float = 0.0
    g_max: float = 5.0
    g_steps: int = 500
    observables: tuple[str, ...] = DEFAULT_OBSERVABLES
    out: str | None = None
    format: str = "csv"
    precision: int = 12
    threads: int = 1
    reference: bool = False

    def __post_init__(self):
        if not self.M_list:
            raise ValueError("at least one M is required")
        if not self.g_min < self.g_max:
            raise ValueError(f"need g_min < g_max, got {self.g_min} >= {self.g_max}")
        if self.g_steps < 2:
            raise ValueError(f"g_steps must be >= 2, got {self.g_steps}")
        if not self.observables:
            raise ValueError("observables must be non-empty")
        unknown = [o for o in self.observables if o not in OBSERVABLE_COLUMNS]
        if unknown:
            raise ValueError(f"unknown observables: {unknown} (choose from {sorted(OBSERVABLE_COLUMNS)})")
        if self.format not in ("csv", "json"):
            raise ValueError(f"format must be csv or json, got {self.format!r}")
        if self.precision < 1:
            raise ValueError("precision must be >= 1")
        if self.threads < 1:
            raise ValueError("threads must be >= 1")

    def g_grid(self) -> np.ndarray:
        return np.linspace(self.g_min, self.g_max, self.g_steps)

    def columns(self) -> list[str]:
        cols = ["M", "g"]
        for obs in self.observables:
            cols.extend(OBSERVABLE_COLUMNS[obs])
        return cols


def _fmt_value(value, precision: int) -> str:
    if isinstance(value, str):
        return value
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return format(float(value), f".{precision}g")


def _json_value(value, precision: int):
    if isinstance(value, (str, bool)):
        return value
    if isinstance(value, (int, np.integer)):
        return int(value)
    return float(format(float(value), f".{precision}g"))


def _write_rows(path, columns: list[str], rows: list[dict], fmt: str, precision: int) -> None:
    if fmt == "csv":
        lines = [",".join(columns)]
        for row in rows:
            lines.append(",".join(_fmt_value(row[c], precision) for c in columns))
        text = "\n".join(lines) + "\n"
    else:
        payload = [{c: _json_value(row[c], precision) for c in columns} for row in rows]
        text = json.dumps(payload, indent=1) + "\n"
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _asymptotic_measures(params) -> tuple[float, float, float, float]:
    """Smooth asymptotic curves evaluated at the real predicted sector index."""
    k_tilde = asymptotics.approx_kstar(params)
    energy = asymptotics.approx_energy(params, k_tilde)
    approx = asymptotics.approx_weights(params, k_tilde)
    weights = approx.weights / approx.weights.sum()
    mix = DickeMixture(params.M, weights)
    return k_tilde, energy, correlations.qcd(mix), correlations.rescaled_qcd(mix)


def _measure_cell(spec: SweepSpec, M: int, g: float) -> dict:
    family = ModelFamily(spec.omega_c, spec.eta, M)
    params = family.at(g)
    row: dict = {"M": M, "g": g}

    if spec.reference:
        cutoff = oracle.suggested_cutoff(params)
        if (cutoff + 1) * 2**M > oracle.DIMENSION_CAP:
            marker = "error:dim>cap"
            for obs in spec.observables:
                for col in OBSERVABLE_COLUMNS[obs]:
                    row[col] = marker
            return row
        full = oracle.build_full(params, cutoff)
        energy, psi = oracle.full_ground(full)
        rho_s = oracle.reduce_atoms_full(psi, M)
        weights, _ = oracle.dicke_weights_full(rho_s, M)
        weights = np.clip(weights, 0.0, None)
        mix = DickeMixture(M, weights / weights.sum())
        excitation = np.real(psi.conj() @ full.excitation_term @ psi) / params.omega_c
        kstar = int(round(float(excitation) + M / 2.0))
        qcd_val, rescaled_val = oracle.qcd_general(rho_s, M)
        purity_val = float(np.real(np.trace(rho_s @ rho_s)))
        naive_val = qcd_val / purity_val
    else:
        gs = spectral.global_ground(params)
        energy, kstar = gs.eigenpair.energy, gs.kstar
        mix = (
            reduce_to_dicke_mixture(gs.eigenpair, M)
            if _NEEDS_MIXTURE & set(spec.observables)
            else None
        )
        if mix is not None:
            qcd_val = correlations.qcd(mix)
            rescaled_val = correlations.rescaled_qcd(mix)
            purity_val = correlations.purity(mix)
            naive_val = qcd_val / purity_val

    for obs in spec.observables:
        if obs == "energy":
            row["energy"] = energy
        elif obs == "kstar":
            row["kstar"] = kstar
        elif obs == "kstar_per_M":
            row["kstar_per_M"] = kstar / M
        elif obs == "qcd":
            row["qcd"] = qcd_val
        elif obs == "rescaled_qcd":
            row["rescaled_qcd"] = rescaled_val
        elif obs == "naive_qcd":
            row["naive_qcd"] = naive_val
        elif obs == "purity":
            row["purity"] = purity_val
        elif obs == "tau_tot":
            row["tau_tot"] = entanglement.total_two_tangle(mix) if M >= 2 else "error:M<2"
        elif obs == "concurrence":
            row["concurrence"] = (
                entanglement.concurrence(entanglement.pair_reduction(mix))
                if M >= 2
                else "error:M<2"
            )
        elif obs == "ppt":
            if M > entanglement.PPT_M_CAP:
                row["ppt"] = "error:M>cap"
            else:
                row["ppt"] = entanglement.ppt_entangled(mix)
        elif obs == "bounds":
            if M >= 2:
                lower, upper = entanglement.entanglement_bounds(mix)
            else:
                lower = upper = "error:M<2"
            row["bound_lower"], row["bound_upper"] = lower, upper
        elif obs == "asymptotics":
            (
                row["kstar_approx"],
                row["energy_approx"],
                row["qcd_approx"],
                row["rescaled_qcd_approx"],
            ) = _asymptotic_measures(params)
    return row


def cmd_sweep(spec: SweepSpec) -> list[dict]:
    """One row per (M, g), M outer, in deterministic grid order."""
    cells = [(M, float(g)) for M in spec.M_list for g in spec.g_grid()]
    if spec.threads > 1:
        with ThreadPoolExecutor(max_workers=spec.threads) as pool:
            rows = list(pool.map(lambda c: _measure_cell(spec, *c), cells))
    else:
        rows = [_measure_cell(spec, *c) for c in cells]
    _write_rows(spec.out, spec.columns(), rows, spec.format, spec.precision)
    return rows


def cmd_spectrum(spec: SweepSpec, k_max: int) -> list[dict]:
    """Rows (g, k, E_k) for k = 0..k_max, g outer, k inner."""
    if len(spec.M_list) != 1:
        raise ValueError("spectrum expects a single M")
    M = spec.M_list[0]
    family = ModelFamily(spec.omega_c, spec.eta, M)
    rows = []
    for g in spec.g_grid():
        params = family.at(float(g))
        energies = kernels.scan_lowest(params.omega_c, params.delta, params.lam, M, k_max)
        for k in range(k_max + 1):
            rows.append({"g": float(g), "k": k, "E_k": float(energies[k])})
    _write_rows(spec.out, ["g", "k", "E_k"], rows, spec.format, spec.precision)
    return rows


def cmd_crossings(spec: SweepSpec, k_max: int) -> list[dict]:
    """Rows (k, g_k, g_tilde_k, rel_gap); root failures recorded per row."""
    if len(spec.M_list) != 1:
        raise ValueError("crossings expects a single M")
    M = spec.M_list[0]
    family = ModelFamily(spec.omega_c, spec.eta, M)
    rows = []
    for k in range(k_max):
        g_tilde = asymptotics.approx_crossing(family, k)
        try:
            g_k = spectral.find_level_crossing(family, k)
            rel_gap = abs(g_k - g_tilde) / g_k
        except spectral.BracketError as exc:
            g_k = f"error:{exc}"
            rel_gap = "error:no-root"
        rows.append({"k": k, "g_k": g_k, "g_tilde_k": g_tilde, "rel_gap": rel_gap})
    _write_rows(spec.out, ["k", "g_k", "g_tilde_k", "rel_gap"], rows, spec.format, spec.precision)
    return rows


def cmd_separability(spec: SweepSpec, g: float) -> dict:
    """Machine-readable separability report for one (M, g) point."""
    if len(spec.M_list) != 1:
        raise ValueError("separability expects a single M")
    M = spec.M_list[0]
    family = ModelFamily(spec.omega_c, spec.eta, M)
    params = family.at(g)

    if spec.reference:
        full = oracle.build_full(params, oracle.suggested_cutoff(params))
        _, psi = oracle.full_ground(full)
        rho_s = oracle.reduce_atoms_full(psi, M)
        weights, _ = oracle.dicke_weights_full(rho_s, M)
        weights = np.clip(weights, 0.0, None)
        mix = DickeMixture(M, weights / weights.sum())
        excitation = np.real(psi.conj() @ full.excitation_term @ psi) / params.omega_c
        kstar = int(round(float(excitation) + M / 2.0))
        _, rescaled_val = oracle.qcd_general(rho_s, M)
    else:
        gs = spectral.global_ground(params)
        kstar = gs.kstar
        mix = reduce_to_dicke_mixture(gs.eigenpair, M)
        rescaled_val = correlations.rescaled_qcd(mix)

    lower, upper = entanglement.entanglement_bounds(mix)
    prec = spec.precision
    report = {
        "M": M,
        "eta": _json_value(spec.eta, prec),
        "omega_c": _json_value(spec.omega_c, prec),
        "g": _json_value(g, prec),
        "kstar": kstar,
        "weights": [_json_value(w, prec) for w in mix.weights],
        "ppt_entangled": entanglement.ppt_entangled(mix),
        "tau_tot": _json_value(entanglement.total_two_tangle(mix), prec),
        "rescaled_qcd": _json_value(rescaled_val, prec),
        "bounds": {"lower": _json_value(lower, prec), "upper": _json_value(upper, prec)},
    }
    text = json.dumps(report, indent=1) + "\n"
    if spec.out is None:
        sys.stdout.write(text)
    else:
        with open(spec.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    return report


def _parse_m_spec(text: str) -> list[int]:
    text = text.strip()
    if ".." in text:
        lo, hi = text.split("..", 1)
        values = list(range(int(lo), int(hi) + 1))
        if not values:
            raise ValueError(f"empty M range {text!r}")
        return values
    return [int(text)]


def _read_config(path: str) -> dict[str, str]:
    values: dict[str, str] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key=value, got {raw.rstrip()!r}")
            key, value = line.split("=", 1)
            values[key.strip().replace("-", "_")] = value.strip()
    return values


_CONFIG_PARSERS = {
    "M": _parse_m_spec,
    "eta": float,
    "omega_c": float,
    "g_min": float,
    "g_max": float,
    "g_steps": int,
    "k_max": int,
    "g": float,
    "observables": lambda s: tuple(x.strip() for x in s.split(",") if x.strip()),
    "out": str,
    "format": str,
    "precision": int,
    "threads": int,
    "reference": lambda s: s.strip().lower() in ("1", "true", "yes", "on"),
}


def _resolve(args: argparse.Namespace, key: str, default):
    """flags > config file > defaults."""
    value = getattr(args, key, None)
    if value is not None:
        return value
    if args.config_values and key in args.config_values:
        return _CONFIG_PARSERS[key](args.config_values[key])
    return default


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tclab",
        description="Tavis-Cummings phase-transition laboratory: spectra, crossings, "
        "correlation and entanglement sweeps.",
    )
    parser.add_argument("--version", action="store_true", help="print version and backend")
    sub = parser.add_subparsers(dest="command")

    def add_common(p, needs_kmax=False, needs_g=False):
        p.add_argument("--M", type=_parse_m_spec, default=None, help='atom count, "8" or "2..9"')
        p.add_argument("--eta", type=float, default=None, help="frequency ratio omega_z/omega_c (default 10)")
        p.add_argument("--omega-c", dest="omega_c", type=float, default=None, help="cavity frequency (default 1)")
        p.add_argument("--g-min", dest="g_min", type=float, default=None)
        p.add_argument("--g-max", dest="g_max", type=float, default=None)
        p.add_argument("--g-steps", dest="g_steps", type=int, default=None, help="grid points (default 500)")
        if needs_kmax:
            p.add_argument("--k-max", dest="k_max", type=int, default=None)
        if needs_g:
            p.add_argument("--g", type=float, default=None, help="single coupling value")
        p.add_argument("--observables", type=_CONFIG_PARSERS["observables"], default=None,
                       help="comma list; default: all except ppt")
        p.add_argument("--out", type=str, default=None, help="output path (stdout if omitted)")
        p.add_argument("--format", type=str, default=None, choices=("csv", "json"))
        p.add_argument("--precision", type=int, default=None, help="significant digits (default 12)")
        p.add_argument("--threads", type=int, default=None,
                       help="worker threads (default TCLAB_THREADS or 1)")
        p.add_argument("--reference", action="store_const", const=True, default=None,
                       help="route through the brute-force reference implementation")
        p.add_argument("--config", type=str, default=None, help="key=value config file")

    add_common(sub.add_parser("spectrum", help="per-sector minima E_k over a g grid"), needs_kmax=True)
    add_common(sub.add_parser("crossings", help="level-crossing ladder g_k vs closed form"), needs_kmax=True)
    add_common(sub.add_parser("sweep", help="observables over an (M, g) grid"))
    add_common(sub.add_parser("separability", help="JSON separability report at one g"), needs_g=True)
    return parser


def _spec_from_args(args: argparse.Namespace) -> SweepSpec:
    args.config_values = _read_config(args.config) if getattr(args, "config", None) else {}
    env_threads = os.environ.get("TCLAB_THREADS")
    return SweepSpec(
        M_list=_resolve(args, "M", list(range(2, 10))),
        eta=_resolve(args, "eta", 10.0),
        omega_c=_resolve(args, "omega_c", 1.0),
        g_min=_resolve(args, "g_min", 0.0),
        g_max=_resolve(args, "g_max", 5.0),
        g_steps=_resolve(args, "g_steps", 500),
        observables=tuple(_resolve(args, "observables", DEFAULT_OBSERVABLES)),
        out=_resolve(args, "out", None),
        format=_resolve(args, "format", "csv"),
        precision=_resolve(args, "precision", 12),
        threads=_resolve(args, "threads", int(env_threads) if env_threads else 1),
        reference=bool(_resolve(args, "reference", False)),
    )


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.version:
        from . import __version__

        print(f"tclab {__version__} (kernel backend: {kernels.backend_name()})")
        return 0
    if args.command is None:
        parser.print_help()
        return 2
    try:
        spec = _spec_from_args(args)
        if args.command == "spectrum":
            cmd_spectrum(spec, _resolve(args, "k_max", 50))
        elif args.command == "crossings":
            cmd_crossings(spec, _resolve(args, "k_max", 50))
        elif args.command == "sweep":
            cmd_sweep(spec)
        elif args.command == "separability":
            g = _resolve(args, "g", None)
            if g is None:
                raise ValueError("separability requires --g")
            cmd_separability(spec, float(g))
    except Exception as exc:  # surface one machine-readable line, nonzero exit
        print(json.dumps({"error": f"{type(exc).__name__}: {exc}"}), file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
