"""
Command line front end.

Every subcommand prints or writes plain data (CSV / JSON).  Exit status is 0
on success, including physically undefined answers, 1 on usage errors and 2
on data errors (unreadable input, unwritable output, unfittable data).
"""

import argparse
import csv
import io
import math
import sys
from pathlib import Path

from . import bloch, phases
from .beamline import BEAMS, H_BEAM, O_BEAM, BeamConfig, default_chi_grid, mixed_fringe, \
    reference_config, synthesize_interferogram, synthesize_pair
from .fitters import DARK_LEVEL, fit_sinusoid, phase_shift, shift_uncertainty
from .formats import FormatError, dump_json, read_interferogram, write_interferogram

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2


class UsageError(Exception):
    pass


class DataError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _num(value):
    if value is None or (isinstance(value, float) and not math.isfinite(value)):
        return None
    return value


def _cell(value):
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _table(rows, columns, fmt):
    if fmt == "json":
        return dump_json({"rows": [{c: _num(r.get(c)) for c in columns} for r in rows]})
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for r in rows:
        writer.writerow([_cell(r.get(c)) for c in columns])
    return buf.getvalue()


def _emit(text, out):
    if out is None:
        sys.stdout.write(text)
        return
    try:
        Path(out).write_text(text)
    except OSError as exc:
        raise DataError(f"cannot write {out}: {exc.strerror or exc}") from None


def _outdir(out):
    path = Path(out)
    try:
        path.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise DataError(f"cannot create output directory {out}: {exc.strerror or exc}") from None
    return path


def _single(values, name):
    if not values:
        raise UsageError(f"--{name} is required")
    if len(values) != 1:
        raise UsageError(f"--{name} takes exactly one value for this command")
    return values[0]


def _config(args, theta, alpha):
    try:
        return BeamConfig(theta=theta, alpha=alpha,
                          polarization_fraction=args.pol_fraction,
                          instrument_contrast=args.contrast,
                          mean_counts=args.counts,
                          noise_seed=args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _chi_grid(args):
    try:
        return default_chi_grid(args.chi_start, args.chi_end, args.chi_steps)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _predicted_phase(config, beam):
    offset, fringe = mixed_fringe(config, beam)
    result = phases.phase_of(fringe)
    if not result.defined:
        return None
    return phases.wrap_degrees(-result.value)


def _shift_report(rotated, reference):
    fit, ref = fit_sinusoid(rotated), fit_sinusoid(reference)
    shift = phase_shift(fit, ref)
    return fit, ref, {
        "fit": fit.to_dict(),
        "reference_fit": ref.to_dict(),
        "phase_shift_deg": shift.value if shift.defined else None,
        "phase_shift_defined": shift.defined,
        "phase_shift_sigma_deg": shift_uncertainty(fit, ref) if shift.defined else None,
    }


def cmd_phase_sweep(args):
    thetas = args.theta or [30.0, 60.0, 90.0, 135.0]
    alphas = args.alpha or [45.0, -67.5, 67.5, -90.0, 90.0, -180.0, 180.0, -225.0, 225.0]
    grid = _chi_grid(args)
    with_fit = args.pol_fraction < 1.0
    columns = ["theta_deg", "alpha_deg", "gamma_off_deg", "defined", "magnitude"]
    if with_fit:
        columns += ["fitted_phase_deg", "fitted_defined"]
    rows = []
    for theta in thetas:
        for alpha in alphas:
            config = _config(args, theta, alpha)
            gamma = phases.off_diagonal_phase(theta, alpha)
            row = {
                "theta_deg": float(theta),
                "alpha_deg": float(alpha),
                "gamma_off_deg": gamma.value if gamma.defined else None,
                "defined": gamma.defined,
                "magnitude": gamma.magnitude,
            }
            if with_fit:
                rotated, reference = synthesize_pair(config, O_BEAM, grid)
                _, _, rep = _shift_report(rotated, reference)
                row["fitted_phase_deg"] = rep["phase_shift_deg"]
                row["fitted_defined"] = rep["phase_shift_defined"]
            rows.append(row)
    _emit(_table(rows, columns, args.format), args.out)
    return EXIT_OK


def cmd_interferogram(args):
    theta = _single(args.theta, "theta")
    alpha = _single(args.alpha, "alpha")
    config = _config(args, theta, alpha)
    rotated, reference = synthesize_pair(config, args.beam, _chi_grid(args))
    _, ref_beam = reference_config(config, args.beam)
    _, _, report = _shift_report(rotated, reference)
    predicted = _predicted_phase(config, args.beam)
    ref_predicted = _predicted_phase(reference.config, ref_beam)
    report.update({
        "beam": args.beam,
        "reference_beam": ref_beam,
        "config": config.to_dict(),
        "predicted_shift_deg": (phases.wrap_degrees(predicted - ref_predicted)
                                if predicted is not None and ref_predicted is not None else None),
    })
    text = dump_json(report)
    if args.out is not None:
        outdir = _outdir(args.out)
        try:
            write_interferogram(rotated, outdir / "rotated.csv")
            write_interferogram(reference, outdir / "reference.csv")
            (outdir / "fit_report.json").write_text(text)
        except OSError as exc:
            raise DataError(f"cannot write to {outdir}: {exc.strerror or exc}") from None
    sys.stdout.write(text)
    return EXIT_OK


def cmd_eraser(args):
    theta = _single(args.theta, "theta")
    alphas = args.alpha or [0.0, 67.0, 90.0, 180.0]
    grid = _chi_grid(args)
    rows = []
    for alpha in alphas:
        config = _config(args, theta, alpha)
        row = {"alpha_deg": float(alpha)}
        for beam in (O_BEAM, H_BEAM):
            fit = fit_sinusoid(synthesize_interferogram(config, beam, grid))
            lit = fit.offset > DARK_LEVEL * max(config.mean_counts, 1.0)
            row[f"{beam}_visibility"] = fit.visibility if lit else None
            row[f"{beam}_oscillating"] = fit.oscillating
        rows.append(row)
    columns = ["alpha_deg", "o_visibility", "h_visibility", "o_oscillating", "h_oscillating"]
    _emit(_table(rows, columns, args.format), args.out)
    return EXIT_OK


def _loop_report(build, theta, alpha, samples, phase_fn):
    try:
        loop = build(theta, alpha, samples)
    except bloch.UndefinedLoop as exc:
        return None, {"defined": False, "error": f"UndefinedLoop: {exc}"}
    omega = bloch.loop_solid_angle(loop)
    half = phases.wrap_degrees(bloch.phase_from_solid_angle(omega))
    algebraic = phase_fn(theta, alpha)
    return loop, {
        "defined": True,
        "solid_angle_sr": omega,
        "half_solid_angle_deg": half,
        "algebraic_phase_deg": algebraic.value if algebraic.defined else None,
        "discrepancy_deg": (abs(phases.angular_difference(half, algebraic.value))
                            if algebraic.defined else None),
    }


def cmd_geometry_check(args):
    theta = _single(args.theta, "theta")
    alpha = _single(args.alpha, "alpha")
    if args.samples < 2:
        raise UsageError("--samples must be at least 2")
    off_loop, off = _loop_report(bloch.off_diagonal_loop, theta, alpha, args.samples,
                                 phases.off_diagonal_phase)
    direct_loop, direct = _loop_report(bloch.direct_evolution_loop, theta, alpha, args.samples,
                                       phases.generalized_bp_phase)
    if direct["defined"]:
        direct["expected_solid_angle_sr"] = bloch.expected_direct_solid_angle(theta, alpha)
    report = {
        "theta_deg": float(theta),
        "alpha_deg": float(alpha),
        "samples": args.samples,
        "off_diagonal": off,
        "direct": direct,
    }
    text = dump_json(report)
    if args.out is not None:
        outdir = _outdir(args.out)
        try:
            if off_loop is not None:
                off_loop.to_csv(outdir / "off_diagonal_loop.csv")
            if direct_loop is not None:
                direct_loop.to_csv(outdir / "direct_loop.csv")
            (outdir / "geometry_report.json").write_text(text)
        except OSError as exc:
            raise DataError(f"cannot write to {outdir}: {exc.strerror or exc}") from None
    sys.stdout.write(text)
    return EXIT_OK


def cmd_fit(args):
    try:
        rotated = read_interferogram(args.input)
        reference = read_interferogram(args.reference)
    except FormatError as exc:
        raise DataError(str(exc)) from None
    except OSError as exc:
        raise DataError(f"cannot read input: {exc}") from None
    try:
        _, _, report = _shift_report(rotated, reference)
    except ValueError as exc:
        raise DataError(f"{type(exc).__name__}: {exc}") from None
    report.update({"input": str(args.input), "reference": str(args.reference)})
    _emit(dump_json(report), args.out)
    return EXIT_OK


def _add_common(p, angles=True, config=True, chi=True, fmt=False):
    if angles:
        p.add_argument("--theta", type=float, action="append",
                       help="polar angle of the incident spin, degrees (repeatable)")
        p.add_argument("--alpha", type=float, action="append",
                       help="precession angle, degrees (repeatable)")
    if config:
        p.add_argument("--pol-fraction", type=float, default=1.0)
        p.add_argument("--contrast", type=float, default=1.0)
        p.add_argument("--counts", type=float, default=2000.0,
                       help="expected counts at unit relative intensity")
        p.add_argument("--seed", type=int, default=None,
                       help="enable Poisson counting noise with this seed")
    if chi:
        p.add_argument("--chi-start", type=float, default=0.0)
        p.add_argument("--chi-end", type=float, default=720.0)
        p.add_argument("--chi-steps", type=int, default=32)
    if fmt:
        p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", default=None)


def build_parser():
    parser = _Parser(prog="offdiagphase",
                     description="Off-diagonal geometric phase interferometer lab.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("phase-sweep", help="off-diagonal phase over a (theta, alpha) grid")
    _add_common(p, fmt=True)
    p.set_defaults(func=cmd_phase_sweep)

    p = sub.add_parser("interferogram", help="synthesize and fit a rotated/reference pair")
    _add_common(p)
    p.add_argument("--beam", choices=BEAMS, default=O_BEAM)
    p.set_defaults(func=cmd_interferogram)

    p = sub.add_parser("eraser", help="O- and H-beam visibilities against alpha")
    _add_common(p, fmt=True)
    p.set_defaults(func=cmd_eraser)

    p = sub.add_parser("geometry-check", help="solid angles against algebraic phases")
    _add_common(p, config=False, chi=False)
    p.add_argument("--samples", type=int, default=bloch.DEFAULT_SAMPLES,
                   help="waypoints per arc")
    p.set_defaults(func=cmd_geometry_check)

    p = sub.add_parser("fit", help="fit a measured interferogram against its reference")
    p.add_argument("input")
    p.add_argument("reference")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_fit)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"offdiagphase: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DataError as exc:
        print(f"offdiagphase: error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
