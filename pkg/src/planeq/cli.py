"""Command-line entry point: ``planeq <command> [options]``.

Every command prints plot-ready data as CSV (17 significant digits) or as
JSON with a provenance block.  Exit status is 0 on success, 2 for bad
usage and 3 when a computed result breaks one of its invariants.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

import numpy as np

from . import __version__
from .bipartite import violation_scan
from .circle import angle_lower_symbol
from .dynamics import (EnergyProfile, LindbladParams, analytic_equal_rates, lindblad_integrate,
                       r_from_phi_path)
from .measurement import MeasurementSetup, sample_outcomes
from .plane import SIGMA1, SIGMA2, SIGMA3, von_neumann_entropy
from .sphere import (MagneticConfig, direction_component, magnetic_hamiltonian, quantize_s2,
                     resolution_residual_s2)

EXIT_USAGE = 2
EXIT_INVALID = 3

COMMANDS = ("entropy-curve", "lower-symbol-angle", "lindblad", "bell-scan", "measure-sim",
            "sphere-check")

DEFAULTS = {
    "r": 1.0, "phi0": 0.0, "h1": 0.5, "h2": 0.0, "h3": 0.5, "energy": 1.0,
    "t0": 0.0, "t1": 5.0, "dt": 1e-3, "grid": 101, "seed": 0,
    "phi_s": np.pi / 4, "phi_par": 0.0, "n": 100000,
}


class UsageError(Exception):
    pass


class ValidationFailure(Exception):
    pass


def _fmt(x) -> str:
    if isinstance(x, (bool, np.bool_)):
        return str(int(x))
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    return format(float(x), ".17g")


def _jsonable(x):
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, np.ndarray):
        return _jsonable(x.tolist())
    if isinstance(x, (np.bool_, bool)):
        return bool(x)
    if isinstance(x, np.integer):
        return int(x)
    if isinstance(x, (np.floating, float)):
        return float(x)
    return x


class Result:
    """A table (columns + rows) and/or scalar fields."""

    def __init__(self, columns=None, rows=None, fields=None):
        self.columns = columns or []
        self.rows = rows if rows is not None else []
        self.fields = fields or {}

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if self.columns:
            w.writerow(self.columns)
            for row in self.rows:
                w.writerow([_fmt(v) for v in row])
        else:
            w.writerow(["key", "value"])
            for k, v in _flatten(self.fields):
                w.writerow([k, _fmt(v)])
        return buf.getvalue()

    def to_json(self, provenance: dict) -> str:
        doc = {"provenance": provenance}
        if self.columns:
            doc["columns"] = self.columns
            doc["rows"] = [list(r) for r in self.rows]
        doc.update(self.fields)
        return json.dumps(_jsonable(doc), indent=2)


def _flatten(d, prefix=""):
    for k, v in d.items():
        key = f"{prefix}{k}"
        if isinstance(v, dict):
            yield from _flatten(v, key + ".")
        elif isinstance(v, (list, tuple, np.ndarray)):
            for i, x in enumerate(v):
                yield f"{key}.{i}", x
        else:
            yield key, v


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise UsageError(msg)


def _check(cond: bool, msg: str) -> None:
    if not cond:
        raise ValidationFailure(msg)


def cmd_entropy_curve(p: dict) -> Result:
    n = p["grid"]
    _require(n >= 2, "--grid must be at least 2")
    r = np.linspace(0.0, 1.0, n)
    s = von_neumann_entropy(r)
    _check(np.all(s >= 0.0) and np.all(s <= np.log(2.0) + 1e-15), "entropy out of [0, ln 2]")
    if n >= 3:
        _check(np.all(np.diff(s, 2) <= 1e-12), "entropy is not concave")
    return Result(["r", "S"], list(zip(r, s)))


def cmd_lower_symbol_angle(p: dict) -> Result:
    n, r = p["grid"], p["r"]
    _require(n >= 2, "--grid must be at least 2")
    _require(0.0 <= r <= 1.0, "--r must lie in [0, 1]")
    phi = np.linspace(0.0, 2.0 * np.pi, n)
    a = angle_lower_symbol(phi, r)
    _check(np.all(np.abs(a - np.pi) <= 0.5 * r * r + 1e-12), "symbol leaves its eigenvalue band")
    return Result(["phi", "symbol"], list(zip(phi, a)))


def cmd_lindblad(p: dict) -> Result:
    _require(p["dt"] > 0.0, "--dt must be positive")
    _require(p["t1"] >= p["t0"], "--t1 must not precede --t0")
    _require(0.0 <= p["r"] <= 1.0, "--r must lie in [0, 1]")
    _require(min(p["h1"], p["h2"], p["h3"]) >= 0.0, "rates must be non-negative")
    _require(p["h2"] == 0.0, "--h2 must be 0 for the (r, phi) reduction")
    params = LindbladParams(p["h1"], 0.0, p["h3"], EnergyProfile.constant(p["energy"]))
    try:
        traj = lindblad_integrate(p["r"], p["phi0"], params, p["t0"], p["t1"], p["dt"])
    except FloatingPointError as exc:
        raise ValidationFailure(str(exc)) from exc
    fields = {}
    if len(traj.t) >= 3:
        fields["formula_residual"] = float(np.abs(r_from_phi_path(traj, params) - traj.r).max())
    if p["h1"] == p["h3"]:
        r_a, phi_a = analytic_equal_rates(p["r"], p["phi0"], p["h1"], p["energy"],
                                          traj.t - traj.t[0])
        fields["analytic_residual"] = float(max(np.abs(r_a - traj.r).max(),
                                                np.abs(phi_a - traj.phi).max()))
    _check(np.all((traj.r >= 0.0) & (traj.r <= 1.0)), "r left [0, 1]")
    return Result(["t", "r", "phi", "S"],
                  list(zip(traj.t, traj.r, traj.phi, traj.entropy)), fields)


def cmd_bell_scan(p: dict) -> Result:
    n = p["grid"]
    _require(n >= 8, "--grid must be at least 8")
    s = violation_scan(n)
    rows = zip(s.zeta.ravel(), s.eta.ravel(), s.lhs.ravel(), s.rhs.ravel(), s.violated.ravel())
    return Result(["zeta", "eta", "lhs", "rhs", "violated"], list(rows))


def cmd_measure_sim(p: dict) -> Result:
    _require(p["n"] >= 1, "--n must be at least 1")
    setup = MeasurementSetup(1.0, p["phi_par"], -1.0)
    res = sample_outcomes(setup, p["phi_s"], p["n"], p["seed"])
    probs = {"parallel": res.probability, "perpendicular": 1.0 - res.probability}
    _check(abs(sum(probs.values()) - 1.0) <= 1e-14, "probabilities do not sum to one")
    return Result(fields={
        "probabilities": probs,
        "counts": {"parallel": res.parallel, "perpendicular": res.perpendicular},
        "seed": res.seed,
    })


def cmd_sphere_check(p: dict) -> Result:
    r = p["r"]
    _require(0.0 <= r <= 1.0, "--r must lie in [0, 1]")
    factors, residuals = [], {}
    for i, (name, s) in enumerate(zip(("x", "y", "z"), (SIGMA1, SIGMA2, SIGMA3))):
        A = quantize_s2(direction_component(i), r)
        k = float(np.real(np.trace(A @ s)) / 2.0)
        factors.append(k)
        residuals[f"pauli_{name}"] = float(np.abs(A - k * s).max())
    residuals["resolution"] = resolution_residual_s2(r)
    H = magnetic_hamiltonian(MagneticConfig(1.0, 1.0, (0.0, 1.0, 0.0), r))
    residuals["magnetic_j"] = float(np.abs(H + (r / 3.0) * SIGMA2).max())
    _check(max(residuals.values()) < 1e-9, "sphere quantization residual too large")
    return Result(fields={"r": r, "pauli_factors": factors, "residuals": residuals})


HANDLERS = {
    "entropy-curve": cmd_entropy_curve,
    "lower-symbol-angle": cmd_lower_symbol_angle,
    "lindblad": cmd_lindblad,
    "bell-scan": cmd_bell_scan,
    "measure-sim": cmd_measure_sim,
    "sphere-check": cmd_sphere_check,
}

_FLOAT_KEYS = ("r", "phi0", "h1", "h2", "h3", "energy", "t0", "t1", "dt", "phi_s", "phi_par")
_INT_KEYS = ("grid", "seed", "n")


def read_config(path: str) -> dict:
    """Parse ``key = value`` lines; '#' starts a comment."""
    out = {}
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"{path}:{lineno}: expected key = value")
            key, value = (s.strip() for s in line.split("=", 1))
            key = key.replace("-", "_")
            if key in _FLOAT_KEYS:
                out[key] = float(value)
            elif key in _INT_KEYS:
                out[key] = int(value)
            elif key == "format":
                out[key] = value
            else:
                raise UsageError(f"{path}:{lineno}: unknown key {key!r}")
    return out


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="planeq", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    ap.add_argument("command", choices=COMMANDS)
    for key in _FLOAT_KEYS:
        ap.add_argument("--" + key.replace("_", "-"), dest=key, type=float)
    for key in _INT_KEYS:
        ap.add_argument("--" + key, dest=key, type=int)
    ap.add_argument("--format", choices=("csv", "json"))
    ap.add_argument("--out", help="write here instead of stdout")
    ap.add_argument("--config", help="file of key = value defaults")
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        params = dict(DEFAULTS, format="csv")
        if args.config:
            try:
                params.update(read_config(args.config))
            except (OSError, ValueError) as exc:
                raise UsageError(str(exc)) from exc
        params.update({k: v for k, v in vars(args).items()
                       if v is not None and k not in ("command", "out", "config")})
        if params["format"] not in ("csv", "json"):
            raise UsageError("format must be csv or json")
        try:
            result = HANDLERS[args.command](params)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    except UsageError as exc:
        print(f"planeq: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValidationFailure as exc:
        print(f"planeq: validation failed: {exc}", file=sys.stderr)
        return EXIT_INVALID

    if params["format"] == "json":
        prov = {"command": args.command, "version": __version__,
                "parameters": {k: v for k, v in params.items() if k != "format"},
                "seed": params["seed"]}
        text = result.to_json(prov) + "\n"
    else:
        text = result.to_csv()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
