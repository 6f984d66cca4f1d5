"""Command line: ``inflbeta {fit, study, gof, sample}``.

Exit status is 0 on success, 2 for bad input or arguments and 3 when an
estimator fails.
"""
import argparse
import csv
import json
import math
import sys
from dataclasses import dataclass

import numpy as np

from .beta import BetaParams, make_rng
from .errors import DataError, EstimationError, InflBetaError
from .estimation import fit
from .gof import gof_curve
from .inflated import BeinfParams, Family, InflationPoint, InflParams, sample
from .montecarlo import DEFAULT_SIZES, StudyConfig, preset, run_study

__all__ = ["Dataset", "read_csv", "main", "build_parser"]

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_ESTIMATION = 3


@dataclass
class Dataset:
    values: np.ndarray
    path: str
    column: object = 0

    def __len__(self):
        return self.values.size


def read_csv(path, column=0, header=False):
    """Read one column of a CSV file as values in [0, 1].

    ``column`` is a 0-based index or, with ``header=True``, a column name.
    Row numbers in error messages are 1-based file lines.
    """
    values = []
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        col = column
        for row_no, row in enumerate(reader, start=1):
            if header and row_no == 1:
                names = [c.strip() for c in row]
                if isinstance(col, str) and not col.lstrip("-").isdigit():
                    if col not in names:
                        raise DataError(f"column {col!r} not found in header {names}")
                    col = names.index(col)
                continue
            if not row or all(not c.strip() for c in row):
                continue
            if isinstance(col, str):
                if not col.lstrip("-").isdigit():
                    raise DataError(f"column name {col!r} needs a header row")
                col = int(col)
            if col >= len(row) or col < 0:
                raise DataError(f"row {row_no}: no column {col} (row has {len(row)} fields)",
                                index=row_no)
            cell = row[col].strip()
            try:
                v = float(cell)
            except ValueError:
                raise DataError(f"row {row_no}: cannot parse {cell!r} as a number",
                                index=row_no) from None
            if not (0.0 <= v <= 1.0):
                raise DataError(f"row {row_no}: value {cell} is outside [0, 1]", index=row_no)
            values.append(v)
    if not values:
        raise DataError(f"{path}: no data rows")
    return Dataset(np.array(values), str(path), column)


def _fmt(v):
    return "nan" if isinstance(v, float) and math.isnan(v) else f"{v:.17g}"


def _params_from_args(args):
    fam = Family(args.family)
    bp = BetaParams(args.mu, args.phi)
    if fam is Family.BEINF:
        if args.gamma is None:
            raise DataError("--gamma is required for the beinf family")
        return BeinfParams(args.alpha, args.gamma, bp)
    point = InflationPoint.ZERO if fam is Family.BEZI else InflationPoint.ONE
    return InflParams(args.alpha, point, bp)


# ------------------------------------------------------------------ commands

def cmd_fit(args, out):
    data = read_csv(args.csv, args.column, args.header)
    report = fit(data.values, args.family, method=args.method,
                 parameterization="delta" if args.delta else "standard")
    doc = report.to_dict()
    doc["source"] = data.path
    out.write(json.dumps(doc, indent=2) + "\n")
    return report


_TABLE_HEAD = ("Par", "n", "CM Mean", "CM Bias", "CM sqrtMSE",
               "ML Mean", "ML Bias", "ML sqrtMSE", "CM skip", "ML skip")


def study_table(rows):
    """Aligned text table, one line per (target, n), CM and ML side by side."""
    cells = {}
    order = []
    for r in rows:
        key = (r.target, r.n)
        if key not in cells:
            cells[key] = {}
            order.append(key)
        cells[key][r.estimator] = r
    lines = [_TABLE_HEAD]
    for key in order:
        line = [key[0], str(key[1])]
        for est in ("cm", "ml"):
            r = cells[key].get(est)
            line += ["" if r is None else f"{v:.4f}" for v in
                     ((math.nan,) * 3 if r is None else (r.mean, r.bias, r.rmse))]
        line += ["" if cells[key].get(e) is None else str(cells[key][e].skipped)
                 for e in ("cm", "ml")]
        lines.append(line)
    widths = [max(len(l[i]) for l in lines) for i in range(len(_TABLE_HEAD))]
    return "\n".join("  ".join(c.rjust(w) for c, w in zip(l, widths)) for l in lines) + "\n"


def study_csv(rows, fh):
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(("target", "n", "estimator", "mean", "bias", "rmse", "skipped"))
    for r in rows:
        w.writerow((r.target, r.n, r.estimator, _fmt(r.mean), _fmt(r.bias), _fmt(r.rmse),
                    r.skipped))


def cmd_study(args, out):
    sizes = tuple(args.sizes) if args.sizes else DEFAULT_SIZES
    if args.preset:
        config = preset(args.preset, sizes, args.reps, args.seed)
    else:
        if args.family is None or args.alpha is None or args.mu is None or args.phi is None:
            raise DataError("give --preset, or --family with --alpha, --mu, --phi "
                            "(and --gamma for beinf)")
        config = StudyConfig(_params_from_args(args), sizes, args.reps, args.seed)
    rows = run_study(config, workers=args.workers)
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            study_csv(rows, fh)
    if args.format == "csv":
        study_csv(rows, out)
    else:
        out.write(study_table(rows))
    return rows


def cmd_gof(args, out, err):
    data = read_csv(args.csv, args.column, args.header)
    curve = gof_curve(data.values, args.family, tobit=args.tobit, grid=args.grid)
    cols = curve.columns
    w = csv.writer(out, lineterminator="\n")
    w.writerow(list(cols))
    for i in range(curve.grid.size):
        w.writerow([_fmt(float(c[i])) for c in cols.values()])
    n = len(data)
    for name, d in curve.ks.items():
        label = curve.fits[name].family
        err.write(f"KS {label}: D = {d:.6f}, sqrt(n) D = {math.sqrt(n) * d:.4f}\n")
    return curve


def cmd_sample(args, out):
    params = _params_from_args(args)
    if args.n < 0:
        raise DataError(f"-n must be nonnegative, got {args.n}")
    if args.n == 0:
        return np.empty(0)
    y = sample(params, make_rng(args.seed), args.n)
    out.write("\n".join(f"{v:.17g}" for v in y) + "\n")
    return y


# -------------------------------------------------------------------- parser

def _add_data_args(p):
    p.add_argument("csv", help="input CSV file")
    p.add_argument("--column", default="0", help="column index (0-based) or header name")
    p.add_argument("--header", action="store_true", help="first row is a header")
    p.add_argument("--family", required=True, choices=[f.value for f in Family])


def _add_param_args(p, required):
    p.add_argument("--family", required=required, choices=[f.value for f in Family])
    p.add_argument("--alpha", type=float, required=required)
    p.add_argument("--gamma", type=float, help="P(y=1 | y in {0,1}); beinf only")
    p.add_argument("--mu", type=float, required=required)
    p.add_argument("--phi", type=float, required=required)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="inflbeta", description="Inflated beta distributions: fit, simulate, check fit.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fit", help="fit a family to one CSV column, print JSON")
    _add_data_args(p)
    p.add_argument("--method", choices=("ml", "cm"), default="ml")
    p.add_argument("--delta", action="store_true",
                   help="report delta0 = P(y=0), delta1 = P(y=1) (beinf only)")

    p = sub.add_parser("study", help="Monte Carlo study of the CM and ML estimators")
    p.add_argument("--preset", choices=("table1", "table2"))
    _add_param_args(p, required=False)
    p.add_argument("--sizes", type=int, nargs="+")
    p.add_argument("--reps", type=int, default=5000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("table", "csv"), default="table")
    p.add_argument("--csv", metavar="PATH", help="also write the rows as CSV to PATH")
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("gof", help="empirical vs fitted CDF on a grid, as CSV")
    _add_data_args(p)
    p.add_argument("--tobit", action="store_true", help="add a fitted Tobit CDF column")
    p.add_argument("--grid", type=int, default=512)

    p = sub.add_parser("sample", help="draw values, one per line")
    _add_param_args(p, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    return parser


def main(argv=None, out=None, err=None):
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    args = build_parser().parse_args(argv)
    try:
        if args.command == "fit":
            cmd_fit(args, out)
        elif args.command == "study":
            cmd_study(args, out)
        elif args.command == "gof":
            cmd_gof(args, out, err)
        else:
            cmd_sample(args, out)
    except EstimationError as e:
        err.write(f"inflbeta {args.command}: estimation failed: {e}\n")
        return EXIT_ESTIMATION
    except (InflBetaError, ValueError, OSError) as e:
        err.write(f"inflbeta {args.command}: {e}\n")
        return EXIT_INPUT
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
