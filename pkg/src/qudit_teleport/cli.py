"""Command-line driver: ``python -m qudit_teleport <command> [options]``.

Every command writes one report (JSON by default, CSV on request) and exits
0 on success, 2 on invalid input, 3 when a built-in check fails.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

import numpy as np

from . import __version__
from .antisym import PartitionSpec, antisym_dimension, antisymmetrizer_rank
from .bell_filter import bell_filter_unitary, check_sufficiency
from .prep import prepare_antisymmetric, qutrit_prep_demo
from .teleport import MODES, QuditInput, bell_sweep, efficiency_curve, teleport_collective, teleport_single_qudit

EXIT_OK, EXIT_INVALID, EXIT_CHECK = 0, 2, 3

TOL_PROB = 1e-9
TOL_FID = 1e-9
TOL_ETA_CONST = 1e-10
TOL_ETA = 1e-12
TOL_ZERO = 1e-12


def _check(value, tolerance, passed) -> dict:
    return {"pass": bool(passed), "value": value, "tolerance": tolerance}


def _trials(args, run) -> list[dict]:
    rng = np.random.default_rng(args.seed)
    rows = []
    for t in range(args.trials):
        rows.append({"trial": t, **run(rng).to_dict()})
    return rows


def cmd_teleport(args):
    d = args.d
    rows = _trials(args, lambda rng: teleport_single_qudit(d, QuditInput.random(d, rng), args.mode))
    return rows, _teleport_checks(rows, 1 / d**2)


def cmd_collective(args):
    if args.n is None:
        raise ValueError("collective needs --n")
    d, n = args.d, args.n
    if not 0 < n < d:
        raise ValueError(f"need 0 < n < d, got n={n}")
    part = PartitionSpec.contiguous(d, n)
    dim = math.comb(d, d - n)
    rows = _trials(args, lambda rng: teleport_collective(d, part, QuditInput.random(dim, rng), args.mode))
    return rows, _teleport_checks(rows, 1 / math.comb(d, n) ** 2)


def _teleport_checks(rows, expected_p):
    fid_min = min(r["fidelity"] for r in rows)
    p_err = max(abs(r["success_probability"] - expected_p) for r in rows)
    return {
        "fidelity_min": _check(fid_min, TOL_FID, fid_min >= 1 - TOL_FID),
        "probability_max_error": _check(p_err, TOL_PROB, p_err <= TOL_PROB),
    }


def cmd_filter_check(args):
    spec = bell_filter_unitary(args.d)
    ok, eta = check_sufficiency(spec.unitary)
    rows = [{"k": k, "eta_re": float(e.real), "eta_im": float(e.imag)} for k, e in enumerate(eta)]
    spread = float(np.max(np.abs(eta - eta[0])))
    err = float(np.max(np.abs(eta - 1 / args.d)))
    checks = {
        "eta_constant": _check(spread, TOL_ETA_CONST, ok),
        "eta_equals_inverse_d": _check(err, TOL_ETA, err <= TOL_ETA),
    }
    return rows, checks


def cmd_prepare(args):
    rep = prepare_antisymmetric(args.d)
    rows = [{"stage": n + 2, "probability": p} for n, p in enumerate(rep.stage_probabilities)]
    expected = 1 / math.factorial(args.d)
    checks = {
        "output_fidelity": _check(rep.output_fidelity, 1e-10, rep.output_fidelity >= 1 - 1e-10),
        "total_probability": _check(rep.total_probability, 1e-12, abs(rep.total_probability - expected) <= 1e-12),
    }
    if args.d == 3:
        demo = qutrit_prep_demo()
        rows.append({"stage": "qutrit-demo", "probability": demo.total_probability})
        checks["qutrit_demo_probability"] = _check(demo.total_probability, 1e-12, abs(demo.total_probability - 1 / 3) <= 1e-12)
    return rows, checks


def cmd_efficiency(args):
    ds = [d for d in range(2, args.d + 1, 2)]
    if not ds:
        raise ValueError("efficiency needs --d >= 2")
    rows = efficiency_curve(ds)
    beats = all(r["collective_per_additional_photon"] > 0.5 for r in rows if r["d"] >= 4)
    checks = {
        "individual_rate": _check(0.5, 0.0, all(r["individual_per_additional_photon"] == 0.5 for r in rows)),
        "collective_exceeds_individual": _check(beats, 0.0, beats),
    }
    return rows, checks


def cmd_dims(args):
    d = args.d
    rows = []
    agree = True
    for n in range(d + 1):
        row = {"n": n, "dimension": antisym_dimension(d, n)}
        if d <= 4:
            row["antisymmetrizer_rank"] = antisymmetrizer_rank(d, n)
            agree &= row["antisymmetrizer_rank"] == row["dimension"]
        rows.append(row)
    return rows, {"rank_matches_binomial": _check(agree, 0, agree)}


def cmd_bell_sweep(args):
    table = bell_sweep(args.d)
    rows = [{"m1": m1, "m2": m2, "probability": float(table[m1, m2])} for m1 in range(args.d) for m2 in range(args.d)]
    off = max((r["probability"] for r in rows if (r["m1"], r["m2"]) != (0, 0)), default=0.0)
    checks = {
        "selectivity": _check(off, TOL_ZERO, off < TOL_ZERO),
        "identity_response_positive": _check(float(table[0, 0]), 0.0, table[0, 0] > 0),
    }
    return rows, checks


COMMANDS = {
    "teleport": cmd_teleport,
    "collective": cmd_collective,
    "filter-check": cmd_filter_check,
    "prepare": cmd_prepare,
    "efficiency": cmd_efficiency,
    "dims": cmd_dims,
    "bell-sweep": cmd_bell_sweep,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qudit-teleport", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--d", type=int, required=True)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--out", default="-", help="report path, '-' for stdout")
        if name in ("teleport", "collective"):
            p.add_argument("--trials", type=int, default=10)
            p.add_argument("--mode", choices=MODES, default="physical-filter" if name == "teleport" else "ideal-projector")
        if name == "collective":
            p.add_argument("--n", type=int)
    return parser


def render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2) + "\n"
    rows = report["results"]
    fields = list(dict.fromkeys(k for r in rows for k in r))
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    writer.writeheader()
    for r in rows:
        writer.writerow({k: ";".join(map(repr, v)) if isinstance(v, list) else v for k, v in r.items()})
    return buf.getvalue()


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.seed < 0 or getattr(args, "trials", 1) < 1:
        print("error: --seed must be >= 0 and --trials >= 1", file=sys.stderr)
        return EXIT_INVALID
    config = {k: v for k, v in vars(args).items()}
    try:
        rows, checks = COMMANDS[args.command](args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    report = {
        "command": args.command,
        "config": config,
        "results": rows,
        "checks": checks,
        "version": __version__,
    }
    text = render(report, args.format)
    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w") as fh:
            fh.write(text)
    failed = [name for name, c in checks.items() if not c["pass"]]
    if failed:
        print(f"check failed: {', '.join(failed)}", file=sys.stderr)
        return EXIT_CHECK
    return EXIT_OK


def main():
    sys.exit(run())
