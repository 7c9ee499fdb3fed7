"""Command-line front end: criticality sweeps, score statistics, comparison tables.

Exit codes: 0 success, 1 numerical failure, 2 bad flags. Every output carries
a header echoing the seed, sample count and code version, and identical
invocations produce byte-identical files.
"""

import argparse
import json
import os
import sys

import numpy as np

from . import __version__
from .ensemble import (
    ALPHA_MAX,
    EnsembleSpec,
    build_f_curve,
    distribution_stats,
    estimate_alpha_c,
    estimate_alpha_p,
    histogram,
    integrate_m,
    run_ensemble,
    summarize,
    write_summary_csv,
    write_summary_json,
)
from .measures import Measure
from . import reference

MEASURE_CHOICES = [
    "concurrence", "eof", "negativity", "log-negativity",
    "discord", "discord-left", "discord-right",
    "work-deficit", "work-deficit-left", "work-deficit-right",
]


def parse_alpha_grid(text):
    """'default', 'LO:HI:STEP' or a comma-separated list of powers."""
    if text == "default":
        return None
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise ValueError("grid spec must be LO:HI:STEP")
        lo, hi, step = (float(p) for p in parts)
        if step <= 0 or hi <= lo:
            raise ValueError("grid spec must satisfy LO < HI and STEP > 0")
        return np.arange(lo, hi + step / 2, step)
    return np.array([float(p) for p in text.split(",")])


def _add_common(sub):
    sub.add_argument("--class", dest="state_class", required=True,
                     choices=["haar", "w"], help="state ensemble")
    sub.add_argument("--qubits", type=int, default=3)
    sub.add_argument("--measure", required=True, choices=MEASURE_CHOICES)
    sub.add_argument("--direction", choices=["left", "right"], default=None,
                     help="measured party for discord / work deficit")
    sub.add_argument("--samples", type=int, default=1000)
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--alpha-grid", default="default",
                     help="'default', LO:HI:STEP, or comma list")
    sub.add_argument("--out", default=None, help="output path (default stdout)")
    sub.add_argument("--format", choices=["json", "csv"], default="json")
    sub.add_argument("--workers", type=int,
                     default=int(os.environ.get("QMONO_WORKERS", "1")))
    sub.add_argument("--tol", type=float, default=1e-3,
                     help="bisection tolerance for the criticalities")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="qmono",
        description="Monogamy-score ensembles for random multiqubit pure states")
    sub = parser.add_subparsers(dest="command", required=True)

    p_sweep = sub.add_parser("sweep", help="f(alpha) curve with criticalities")
    _add_common(p_sweep)

    p_stats = sub.add_parser("stats", help="moments (and histogram) of the score")
    _add_common(p_stats)
    p_stats.add_argument("--alpha", type=float, default=1.0)
    p_stats.add_argument("--histogram", nargs=3, metavar=("BINS", "LO", "HI"),
                         default=None, help="histogram bins and range")

    p_table = sub.add_parser("table", help="recompute a bundled comparison table")
    p_table.add_argument("--table", type=int, required=True)
    p_table.add_argument("--samples", type=int, default=1000)
    p_table.add_argument("--seed", type=int, default=0)
    p_table.add_argument("--out", default=None)
    p_table.add_argument("--format", choices=["text", "csv", "json"], default="text")
    p_table.add_argument("--workers", type=int,
                         default=int(os.environ.get("QMONO_WORKERS", "1")))
    return parser


def _make_spec(args, parser):
    try:
        measure = Measure.parse(args.measure, args.direction)
        grid = parse_alpha_grid(args.alpha_grid)
        return EnsembleSpec(
            state_class="w-class" if args.state_class == "w" else "haar",
            n_qubits=args.qubits, n_samples=args.samples, measure=measure,
            base_seed=args.seed, alpha_grid=grid, workers=args.workers)
    except ValueError as exc:
        parser.error(str(exc))


def _emit(text_writer, out_path):
    if out_path is None:
        text_writer(sys.stdout)
    else:
        with open(out_path, "w") as fh:
            text_writer(fh)


def cmd_sweep(args, parser):
    spec = _make_spec(args, parser)
    summary = summarize(spec, tol=args.tol)
    if args.format == "json":
        _emit(lambda fh: write_summary_json(summary, fh, version=__version__), args.out)
    else:
        _emit(lambda fh: write_summary_csv(summary, fh, version=__version__), args.out)
    return 0


def cmd_stats(args, parser):
    if args.alpha <= 0:
        parser.error("--alpha must be positive")
    hist_spec = None
    if args.histogram is not None:
        try:
            hist_spec = (int(args.histogram[0]), float(args.histogram[1]),
                         float(args.histogram[2]))
        except ValueError:
            parser.error("--histogram takes BINS LO HI")
        if hist_spec[0] < 1 or not hist_spec[1] < hist_spec[2]:
            parser.error("--histogram takes BINS >= 1 and LO < HI")
    spec = _make_spec(args, parser)
    records = run_ensemble(spec)
    moments = distribution_stats(records, args.alpha)
    hist = None
    if hist_spec is not None:
        hist = histogram(records, args.alpha, *hist_spec)

    def write_json(fh):
        out = {
            "version": __version__,
            "state_class": spec.state_class,
            "n_qubits": spec.n_qubits,
            "n_samples": spec.n_samples,
            "base_seed": spec.base_seed,
            "measure": spec.measure.value,
            "alpha": args.alpha,
            "mean": moments.mean,
            "variance": moments.variance,
            "skewness": None if np.isnan(moments.skewness) else moments.skewness,
        }
        if hist is not None:
            out["histogram"] = [[float(l), float(r), float(f)] for l, r, f in hist]
        json.dump(out, fh, indent=2, sort_keys=True)
        fh.write("\n")

    def write_csv(fh):
        fh.write(f"# state_class={spec.state_class} n_qubits={spec.n_qubits} "
                 f"n_samples={spec.n_samples} base_seed={spec.base_seed} "
                 f"measure={spec.measure.value} version={__version__}\n")
        fh.write("alpha,mean,variance,skewness\n")
        skew = "" if np.isnan(moments.skewness) else format(moments.skewness, ".6g")
        fh.write(f"{args.alpha:.6g},{moments.mean:.6g},{moments.variance:.6g},{skew}\n")
        if hist is not None:
            fh.write("bin_left,bin_right,rel_freq\n")
            for l, r, f in hist:
                fh.write(f"{l:.6g},{r:.6g},{f:.6g}\n")

    _emit(write_json if args.format == "json" else write_csv, args.out)
    return 0


# ---------------------------------------------------------------------------
# comparison tables


def _fmt(x):
    if x is None:
        return "-"
    if isinstance(x, str):
        return x
    if isinstance(x, float) and np.isinf(x):
        return f"exceeds {ALPHA_MAX:g}"
    return format(x, ".4f")


def _dev(computed, ref):
    if ref is None or computed is None:
        return None
    if isinstance(computed, float) and np.isinf(computed):
        return None
    return abs(computed - ref)


class _EnsembleCache:
    def __init__(self, samples, seed, workers):
        self.samples = samples
        self.seed = seed
        self.workers = workers
        self._store = {}

    def records(self, state_class, n_qubits, measure):
        key = (state_class, n_qubits, measure)
        if key not in self._store:
            spec = EnsembleSpec(state_class, n_qubits, self.samples, measure,
                                self.seed, workers=self.workers)
            self._store[key] = run_ensemble(spec)
        return self._store[key]


def _table_rows(table_id, cache):
    """Rows: (quantity, measure, context, computed, reference)."""
    rows = []
    if table_id in (1, 2):
        source = reference.CRITICALITY if table_id == 1 else reference.AREA_SCORE
        for measure, by_class in source.items():
            for cls, ref in by_class.items():
                recs = cache.records(cls, 3, measure)
                tag = "GHZ" if cls == "haar" else "W"
                if table_id == 1:
                    ap = estimate_alpha_p(recs)
                    ac = estimate_alpha_c(recs)
                    rows.append(("alpha_p", measure.value, tag, ap, ref[0]))
                    rows.append(("alpha_c", measure.value, tag, ac,
                                 "> 10" if ref[1] is None else ref[1]))
                else:
                    ac = estimate_alpha_c(recs)
                    if ac is None or np.isinf(ac):
                        m = None
                    else:
                        m = integrate_m(build_f_curve(recs), ac)
                    rows.append(("m_q", measure.value, tag, m, ref))
    elif table_id in (3, 4):
        alpha = 1.0 if table_id == 3 else 2.0
        source = reference.MOMENTS_LINEAR if table_id == 3 else reference.MOMENTS_SQUARED
        for measure, by_class in source.items():
            for cls, ref in by_class.items():
                recs = cache.records(cls, 3, measure)
                mo = distribution_stats(recs, alpha)
                tag = "GHZ" if cls == "haar" else "W"
                rows.append(("mean", measure.value, tag, mo.mean, ref[0]))
                rows.append(("variance", measure.value, tag, mo.variance, ref[1]))
                skew = None if np.isnan(mo.skewness) else mo.skewness
                rows.append(("skewness", measure.value, tag, skew, ref[2]))
    elif table_id == 5:
        for measure, by_n in reference.SCALING_STATS.items():
            for n, ref in by_n.items():
                recs = cache.records("haar", n, measure)
                mo = distribution_stats(recs, 2.0)
                rows.append(("mean", measure.value, f"N={n}", mo.mean, ref[0]))
                rows.append(("variance", measure.value, f"N={n}", mo.variance, ref[1]))
                rows.append(("skewness", measure.value, f"N={n}", mo.skewness, ref[2]))
    elif table_id == 6:
        for measure, by_n in reference.SCALING_MEANS.items():
            for n, ref in by_n.items():
                recs = cache.records("haar", n, measure)
                mo = distribution_stats(recs, 2.0)
                rows.append(("mean", measure.value, f"N={n}", mo.mean, ref))
    else:
        raise ValueError(f"unknown table id {table_id}")
    return rows


def cmd_table(args, parser):
    if args.table not in reference.TABLE_IDS:
        parser.error(f"--table must be one of {reference.TABLE_IDS}")
    cache = _EnsembleCache(args.samples, args.seed, args.workers)
    rows = _table_rows(args.table, cache)

    def write_text(fh):
        fh.write(f"# table={args.table} n_samples={args.samples} "
                 f"base_seed={args.seed} version={__version__}\n")
        header = f"{'quantity':<10} {'measure':<20} {'cell':<6} " \
                 f"{'computed':>12} {'ref':>12} {'|dev|':>10}\n"
        fh.write(header)
        for quantity, measure, tag, computed, ref in rows:
            dev = _dev(computed, ref if not isinstance(ref, str) else None)
            fh.write(f"{quantity:<10} {measure:<20} {tag:<6} "
                     f"{_fmt(computed):>12} {_fmt(ref):>12} "
                     f"{(_fmt(dev) if dev is not None else '-'):>10}\n")

    def write_csv(fh):
        fh.write(f"# table={args.table} n_samples={args.samples} "
                 f"base_seed={args.seed} version={__version__}\n")
        fh.write("quantity,measure,cell,computed,reference,abs_deviation\n")
        for quantity, measure, tag, computed, ref in rows:
            dev = _dev(computed, ref if not isinstance(ref, str) else None)
            comp = "" if computed is None else _fmt(computed)
            fh.write(f"{quantity},{measure},{tag},{comp},"
                     f"{_fmt(ref) if ref is not None else ''},"
                     f"{'' if dev is None else _fmt(dev)}\n")

    def write_json(fh):
        payload = {
            "version": __version__, "table": args.table,
            "n_samples": args.samples, "base_seed": args.seed,
            "rows": [
                {"quantity": q, "measure": m, "cell": t,
                 "computed": (None if c is None
                              else ("exceeds " + format(ALPHA_MAX, "g")
                                    if isinstance(c, float) and np.isinf(c) else c)),
                 "reference": r,
                 "abs_deviation": _dev(c, r if not isinstance(r, str) else None)}
                for q, m, t, c, r in rows
            ],
        }
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")

    writer = {"text": write_text, "csv": write_csv, "json": write_json}[args.format]
    _emit(writer, args.out)
    return 0


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = {"sweep": cmd_sweep, "stats": cmd_stats, "table": cmd_table}[args.command]
    try:
        return handler(args, parser)
    except (ValueError, ArithmeticError, RuntimeError) as exc:
        print(f"qmono: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
