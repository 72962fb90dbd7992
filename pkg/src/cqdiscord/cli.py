"""Command-line interface.

One subcommand per data product: ``evolve`` sweeps the damping probability,
``surface`` tabulates the closed-form correlation surfaces, ``delta-surface``
samples the universal conditional-entropy surface, ``trajectory`` emits the
Bloch-plane trajectories, ``discord`` evaluates a user-supplied state file,
and ``report`` writes the full set of CSV tables with rendered figures next
to them.

Tabular output is CSV with a single header row, 12 significant digits and
empty cells for undefined values; byte-identical across runs for fixed
flags.  Exit codes: 0 success, 1 failed --check, 2 usage or validation
error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import channels, correlations, qmat, states
from .errors import DegenerateDomainError, DomainError

MAX_SWEEP_POINTS = 100000
CHECK_TOL = 1e-4


@dataclass(frozen=True)
class SweepConfig:
    """Validated parameters of a damping-probability sweep."""

    points: int
    p_min: float
    p_max: float
    method: str
    gamma: float | None = None

    def __post_init__(self):
        if not 2 <= self.points <= MAX_SWEEP_POINTS:
            raise DomainError(f"--points must lie in [2, {MAX_SWEEP_POINTS}], got {self.points}")
        if not (0.0 <= self.p_min < self.p_max <= 1.0):
            raise DomainError(f"need 0 <= p-min < p-max <= 1, got [{self.p_min}, {self.p_max}]")
        if self.gamma is not None and self.gamma <= 0.0:
            raise DomainError(f"--gamma must be positive, got {self.gamma}")


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, str):
        return value
    v = float(value)
    if v == 0.0:
        v = 0.0  # normalize -0.0
    return format(v, ".12g")


def _write_csv(header, rows, out: str | None):
    def dump(stream):
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([_fmt(cell) for cell in row])

    if out is None:
        dump(sys.stdout)
    else:
        with open(out, "w", encoding="utf-8", newline="") as f:
            dump(f)


# ----------------------------------------------------------------------
# Row builders (shared between the plain commands and the report path)
# ----------------------------------------------------------------------

def _evolved_state(p: float) -> np.ndarray:
    rho0 = states.assemble(states.plus_minus_state())
    return channels.apply_local(rho0, channels.amplitude_damping(p), "B")


def _evolve_rows(config: SweepConfig):
    header = ["p", "gamma_t", "s", "phi", "discord", "classical", "mutual"]
    if config.method == "both":
        header += ["discord_num", "classical_num", "mutual_num", "abs_diff"]
    if config.gamma is not None:
        header += ["t"]

    rows = []
    worst_diff = 0.0
    for p in np.linspace(config.p_min, config.p_max, config.points):
        point = channels.trajectory(float(p))
        gamma_t = None if p == 1.0 else float(-np.log1p(-p))
        params = states.CanonicalParams(point.s, point.s, point.phi)

        analytic = None
        numeric = None
        if config.method in ("analytic", "both"):
            d = correlations.discord_analytic(params)
            c = correlations.classical_analytic(params)
            analytic = (d, c, d + c)
        if config.method in ("numeric", "both"):
            rep = correlations.discord_numeric(_evolved_state(float(p)), "B")
            numeric = (rep.discord, rep.classical, rep.mutual)

        row = [float(p), gamma_t, point.s, point.phi]
        row += list(analytic if analytic is not None else numeric)
        if config.method == "both":
            diff = max(abs(a - n) for a, n in zip(analytic, numeric))
            worst_diff = max(worst_diff, diff)
            row += [*numeric, diff]
        if config.gamma is not None:
            row += [None if gamma_t is None else gamma_t / config.gamma]
        rows.append(row)
    return header, rows, worst_diff


def _surface_rows(ns: int, nphi: int, quantity: str):
    if ns < 2 or nphi < 2:
        raise DomainError("surface grid needs at least 2 points per axis")
    fn = correlations.discord_analytic if quantity == "discord" else correlations.classical_analytic
    rows = []
    best = (-np.inf, 0.0, 0.0)
    for s in np.linspace(0.0, 1.0, ns):
        for phi in np.linspace(0.0, np.pi, nphi):
            value = fn(states.CanonicalParams(float(s), float(s), float(phi)))
            rows.append([float(s), float(phi), value, None])
            if value > best[0]:
                best = (value, float(s), float(phi))
    rows.append([best[1], best[2], best[0], "max"])
    return ["s", "phi", "value", "tag"], rows


def _delta_rows(n: int, params: states.CanonicalParams | None):
    if n < 2:
        raise DomainError("delta-surface grid needs at least 2 points per axis")
    header = ["x", "y", "delta", "tag"]
    axis = np.linspace(-1.0, 1.0, n)

    if params is not None:
        try:
            dom = correlations.ellipse_domain(params)
        except DegenerateDomainError as exc:
            print(f"warning: {exc}; emitting the segment fallback", file=sys.stderr)
            co = states.coefficients(params)
            rows = []
            for t in axis:
                x, y = float(t * co.a3), float(t * co.b3)
                rows.append([x, y, correlations.delta_tilde(x, y), None])
            value, (mx, my) = correlations.minimize_delta_on_segment(co.a3, co.b3)
            rows.append([mx, my, value, "min"])
            return header, rows
    else:
        dom = None

    rows = []
    for x in axis:
        for y in axis:
            x, y = float(x), float(y)
            inside = abs(x) + abs(y) <= 1.0 + correlations.DELTA_DOMAIN_TOL
            if inside and dom is not None:
                inside = dom.A * x * x + 2.0 * dom.B * x * y + dom.C * y * y <= 1.0
            rows.append([x, y, correlations.delta_tilde(x, y) if inside else None, None])
    if dom is not None:
        value, (mx, my) = correlations.minimize_delta_on_ellipse(dom)
        rows.append([mx, my, value, "min"])
    return header, rows


def _trajectory_rows(points: int):
    if points < 2:
        raise DomainError("--points must be at least 2")
    rows = []
    for p in np.linspace(0.0, 1.0, points):
        tp = channels.trajectory(float(p))
        rows.append(
            [tp.p, tp.bloch_plus[0], tp.bloch_plus[2], tp.bloch_minus[0], tp.bloch_minus[2]]
        )
    return ["p", "x_plus", "z_plus", "x_minus", "z_minus"], rows


# ----------------------------------------------------------------------
# State-file parsing
# ----------------------------------------------------------------------

def load_state(path: str) -> np.ndarray:
    """Read a state file: either a cq-spec JSON document with 'bloch0' and
    'bloch1' vectors, or 4 rows of 8 decimals (interleaved re, im)."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise DomainError(f"cannot read state file: {exc}") from exc
    stripped = text.strip()
    if not stripped:
        raise DomainError("state file is empty")

    if stripped.startswith("{"):
        try:
            doc = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise DomainError(f"malformed cq-spec JSON: {exc}") from exc
        if not isinstance(doc, dict) or "bloch0" not in doc or "bloch1" not in doc:
            raise DomainError("cq-spec must be an object with 'bloch0' and 'bloch1' arrays")
        try:
            cq = states.CqState.from_bloch(doc["bloch0"], doc["bloch1"])
        except (TypeError, ValueError) as exc:
            raise DomainError(f"invalid cq-spec: {exc}") from exc
        return states.assemble(cq)

    lines = [line for line in stripped.splitlines() if line.strip()]
    if len(lines) != 4:
        raise DomainError(f"raw state matrix needs exactly 4 rows, got {len(lines)}")
    matrix = np.zeros((4, 4), dtype=complex)
    for i, line in enumerate(lines):
        parts = line.split()
        if len(parts) != 8:
            raise DomainError(f"row {i + 1} needs 8 numbers (re im pairs), got {len(parts)}")
        try:
            nums = [float(v) for v in parts]
        except ValueError as exc:
            raise DomainError(f"malformed number in row {i + 1}: {exc}") from exc
        matrix[i] = [complex(nums[2 * j], nums[2 * j + 1]) for j in range(4)]
    return qmat.validate_density(matrix, dim=4)


# ----------------------------------------------------------------------
# Commands
# ----------------------------------------------------------------------

def _cmd_evolve(args) -> int:
    config = SweepConfig(args.points, args.p_min, args.p_max, args.method, args.gamma)
    if args.check and config.method != "both":
        raise DomainError("--check requires --method both")
    header, rows, worst = _evolve_rows(config)
    _write_csv(header, rows, args.out)
    if args.check and worst > CHECK_TOL:
        print(f"check failed: max |analytic - numeric| = {worst:.3e} exceeds {CHECK_TOL}", file=sys.stderr)
        return 1
    return 0


def _cmd_surface(args) -> int:
    header, rows = _surface_rows(args.ns, args.nphi, args.quantity)
    _write_csv(header, rows, args.out)
    return 0


def _cmd_delta_surface(args) -> int:
    given = [v is not None for v in (args.s0, args.s1, args.phi)]
    if any(given) and not all(given):
        raise DomainError("--s0, --s1 and --phi must be given together")
    params = states.CanonicalParams(args.s0, args.s1, args.phi) if all(given) else None
    header, rows = _delta_rows(args.n, params)
    _write_csv(header, rows, args.out)
    return 0


def _cmd_trajectory(args) -> int:
    header, rows = _trajectory_rows(args.points)
    _write_csv(header, rows, args.out)
    return 0


def _cmd_discord(args) -> int:
    rho = load_state(args.input)
    report = correlations.discord_numeric(
        rho, args.measured, mesh=(args.ntheta, args.nphi_m), refine=not args.no_refine
    )
    print(f"discord = {_fmt(report.discord)}")
    print(f"classical = {_fmt(report.classical)}")
    print(f"mutual = {_fmt(report.mutual)}")
    print(f"argmin_theta = {_fmt(report.argmin_basis.theta)}")
    print(f"argmin_phi_m = {_fmt(report.argmin_basis.phi_m)}")
    return 0


def _cmd_report(args) -> int:
    from . import figures

    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    written = []

    # Correlations along the damping sweep.
    config = SweepConfig(args.points, 0.0, 1.0, "analytic")
    header, rows, _ = _evolve_rows(config)
    _write_csv(header, rows, str(outdir / "evolution.csv"))
    ps = np.array([row[0] for row in rows])
    figures.render_evolution(
        outdir / "evolution.png",
        ps,
        np.array([row[4] for row in rows]),
        np.array([row[5] for row in rows]),
    )
    written += ["evolution.csv", "evolution.png"]

    # The universal surface, unconstrained and under two sample constraints.
    header, rows = _delta_rows(args.delta_n, None)
    _write_csv(header, rows, str(outdir / "delta_surface.csv"))
    axis = np.linspace(-1.0, 1.0, args.delta_n)
    xg, yg = np.meshgrid(axis, axis, indexing="ij")
    diamond = np.abs(xg) + np.abs(yg) <= 1.0 + correlations.DELTA_DOMAIN_TOL
    base = np.full(xg.shape, np.nan)
    base[diamond] = correlations.delta_tilde(xg[diamond], yg[diamond])
    panels = [("unconstrained", base)]
    for phi in (np.pi / 3.0, 2.0 * np.pi / 3.0):
        dom = correlations.ellipse_domain(states.CanonicalParams(1.0, 1.0, phi))
        mask = diamond & (dom.A * xg**2 + 2.0 * dom.B * xg * yg + dom.C * yg**2 <= 1.0)
        grid = np.full(xg.shape, np.nan)
        grid[mask] = correlations.delta_tilde(xg[mask], yg[mask])
        panels.append((f"constrained, phi = {phi:.3f}", grid))
    figures.render_delta_surface(outdir / "delta_surface.png", axis, axis, panels)
    written += ["delta_surface.csv", "delta_surface.png"]

    # Closed-form correlation surfaces.
    grids = {}
    for quantity in ("discord", "classical"):
        header, rows = _surface_rows(args.ns, args.nphi, quantity)
        _write_csv(header, rows, str(outdir / f"{quantity}_surface.csv"))
        grid = np.array([row[2] for row in rows[:-1]]).reshape(args.ns, args.nphi)
        grids[quantity] = grid
        written.append(f"{quantity}_surface.csv")
    figures.render_correlation_surfaces(
        outdir / "correlation_surfaces.png",
        np.linspace(0.0, 1.0, args.ns),
        np.linspace(0.0, np.pi, args.nphi),
        grids["discord"],
        grids["classical"],
    )
    written.append("correlation_surfaces.png")

    # Bloch-plane trajectories.
    header, rows = _trajectory_rows(args.points)
    _write_csv(header, rows, str(outdir / "trajectories.csv"))
    arr = np.array(rows, dtype=float)
    figures.render_trajectories(outdir / "trajectories.png", arr[:, 1], arr[:, 2], arr[:, 3], arr[:, 4])
    written += ["trajectories.csv", "trajectories.png"]

    for name in written:
        print(outdir / name)
    return 0


# ----------------------------------------------------------------------
# Parser
# ----------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cqdiscord",
        description="Quantum discord of two-qubit classical-quantum states under local amplitude damping.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    evolve = sub.add_parser("evolve", help="sweep the damping probability and tabulate correlations")
    evolve.add_argument("--points", type=int, default=201)
    evolve.add_argument("--method", choices=["analytic", "numeric", "both"], default="analytic")
    evolve.add_argument("--gamma", type=float, default=None, help="damping rate for a time-axis column")
    evolve.add_argument("--p-min", type=float, default=0.0, dest="p_min")
    evolve.add_argument("--p-max", type=float, default=1.0, dest="p_max")
    evolve.add_argument("--check", action="store_true", help="exit 1 if analytic and numeric disagree")
    evolve.add_argument("--out", default=None, help="output CSV path (default: stdout)")
    evolve.set_defaults(func=_cmd_evolve)

    surface = sub.add_parser("surface", help="closed-form correlation surface over purity and angle")
    surface.add_argument("--ns", type=int, default=101)
    surface.add_argument("--nphi", type=int, default=101)
    surface.add_argument("--quantity", choices=["discord", "classical"], default="discord")
    surface.add_argument("--out", default=None)
    surface.set_defaults(func=_cmd_surface)

    delta = sub.add_parser("delta-surface", help="sample the universal conditional-entropy surface")
    delta.add_argument("--n", type=int, default=101)
    delta.add_argument("--s0", type=float, default=None)
    delta.add_argument("--s1", type=float, default=None)
    delta.add_argument("--phi", type=float, default=None)
    delta.add_argument("--out", default=None)
    delta.set_defaults(func=_cmd_delta_surface)

    traj = sub.add_parser("trajectory", help="Bloch-plane trajectories under amplitude damping")
    traj.add_argument("--points", type=int, default=201)
    traj.add_argument("--out", default=None)
    traj.set_defaults(func=_cmd_trajectory)

    disc = sub.add_parser("discord", help="numeric correlations of a state read from file")
    disc.add_argument("--input", required=True, help="state file (cq-spec JSON or 4x8 raw matrix)")
    disc.add_argument("--measured", choices=["A", "B"], default="B")
    disc.add_argument("--ntheta", type=int, default=64)
    disc.add_argument("--nphi-m", type=int, default=128, dest="nphi_m")
    disc.add_argument("--no-refine", action="store_true")
    disc.set_defaults(func=_cmd_discord)

    report = sub.add_parser("report", help="write every CSV table with a rendered figure alongside")
    report.add_argument("--outdir", required=True)
    report.add_argument("--points", type=int, default=201)
    report.add_argument("--ns", type=int, default=61)
    report.add_argument("--nphi", type=int, default=61)
    report.add_argument("--delta-n", type=int, default=121, dest="delta_n")
    report.set_defaults(func=_cmd_report)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
