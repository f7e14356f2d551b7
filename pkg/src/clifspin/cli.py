"""Command-line entry point: ``verify``, ``planewave``, ``table``, ``decompose``.

All output is UTF-8 JSON unless ``--text`` is given. ``CLIFFORD_SEED`` in the
environment overrides ``--seed``.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from .algebra import CliffordError, Signature, blade_name, from_json, multiplication_table, to_json
from .dirac import (
    ZERO_POTENTIAL,
    PlaneWaveParams,
    SingularError,
    SpacetimePoint,
    dhe_residual,
    lounesto_decompose,
    planewave,
    planewave_field,
)
from .harness import FAULTS, SUITES, RunConfig, resolve_suites, run_verify

SEED_ENV = "CLIFFORD_SEED"


def _floats(text: str, n: int, what: str) -> tuple[float, ...]:
    try:
        vals = tuple(float(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"{what} must be {n} comma-separated numbers") from None
    if len(vals) != n:
        raise argparse.ArgumentTypeError(f"{what} must be {n} comma-separated numbers")
    return vals


def _point3(text: str):
    return _floats(text, 3, "--x")


def _sig(text: str) -> Signature:
    try:
        p, q = (int(v) for v in text.split(","))
        return Signature(p, q)
    except (ValueError, CliffordError) as exc:
        raise argparse.ArgumentTypeError(f"bad signature {text!r}: {exc}") from None


def _tol(text: str) -> tuple[str, float]:
    key, sep, val = text.partition("=")
    if not sep:
        raise argparse.ArgumentTypeError("tolerance override must look like CHECK_ID=VALUE")
    return key, float(val)


def _read_json(path: str):
    if path == "-":
        return json.load(sys.stdin)
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def _emit(obj, out: str | None = None) -> None:
    text = json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="clifspin", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run property-check suites")
    v.add_argument("--suite", action="append", default=[], metavar="NAME", help=f"one of {', '.join(SUITES)}, all")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--samples", type=int, default=1000)
    v.add_argument("--rotor-samples", type=int, default=200)
    v.add_argument("--momenta", type=int, default=20)
    v.add_argument("--tol", type=_tol, action="append", default=[], metavar="ID=VALUE")
    v.add_argument("--out", metavar="PATH")
    v.add_argument("--inject-fault", choices=FAULTS, help="negative control: deliberately break one component")
    v.add_argument("--timing", action="store_true", help="include wall time (makes reports run-dependent)")
    v.add_argument("--text", action="store_true", help="print a table instead of JSON")

    p = sub.add_parser("planewave", help="evaluate a plane-wave solution and its residual")
    p.add_argument("--params", required=True, metavar="FILE")
    p.add_argument("--t", type=float, default=0.0)
    p.add_argument("--x", type=_point3, default=(0.0, 0.0, 0.0))

    t = sub.add_parser("table", help="print the blade multiplication table")
    t.add_argument("--sig", type=_sig, required=True, metavar="P,Q")
    t.add_argument("--text", action="store_true")

    d = sub.add_parser("decompose", help="polar decomposition of a Cl(3,0) element")
    d.add_argument("--in", dest="infile", required=True, metavar="FILE")
    return ap


def cmd_verify(args, ap) -> int:
    seed = args.seed
    env = os.environ.get(SEED_ENV)
    if env is not None:
        try:
            seed = int(env)
        except ValueError:
            ap.error(f"{SEED_ENV} must be an integer, got {env!r}")
    try:
        suites = resolve_suites(args.suite)
        cfg = RunConfig(
            seed=seed,
            samples=args.samples,
            rotor_samples=args.rotor_samples,
            momenta=args.momenta,
            tolerances=dict(args.tol),
            inject_fault=args.inject_fault,
            timing=args.timing,
        )
    except ValueError as exc:
        ap.error(str(exc))
    report = run_verify(cfg, suites)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(report.dumps())
    if args.text:
        width = max(len(r.id) for r in report.records)
        for r in report.records:
            flag = "PASS" if r.passed else "FAIL"
            op = "<=" if r.bound == "upper" else ">"
            print(f"{flag}  {r.id:<{width}}  {r.residual:.3e} {op} {r.tolerance:.1e}  (n={r.samples})")
        print("overall:", "PASS" if report.passed else "FAIL")
    elif not args.out:
        sys.stdout.write(report.dumps())
    return 0 if report.passed else 1


def cmd_planewave(args, ap) -> int:
    try:
        params = PlaneWaveParams.from_json(_read_json(args.params))
    except (OSError, json.JSONDecodeError, CliffordError) as exc:
        ap.error(f"cannot read plane-wave parameters: {exc}")
    pt = SpacetimePoint(args.t, args.x)
    psi = planewave(params, pt)
    res = dhe_residual(planewave_field(params), ZERO_POTENTIAL, params.m, pt)
    _emit({"params": params.to_json(), "t": pt.t, "x": list(pt.x), "psi": to_json(psi), "psi_text": str(psi), "residual": res.norm()})
    return 0


def cmd_table(args, ap) -> int:
    sig = args.sig
    names = [blade_name(m) for m in range(sig.dim)]
    rows = [[f"{'+' if s > 0 else '-'}{names[m]}" for s, m in row] for row in multiplication_table(sig)]
    if args.text:
        w = max(len(c) for row in rows for c in row) + 1
        print(" " * w + "".join(f"{n:>{w}}" for n in names))
        for n, row in zip(names, rows):
            print(f"{n:>{w}}" + "".join(f"{c:>{w}}" for c in row))
    else:
        _emit({"signature": [sig.p, sig.q], "blades": names, "table": rows})
    return 0


def cmd_decompose(args, ap) -> int:
    try:
        psi = from_json(_read_json(args.infile))
    except (OSError, json.JSONDecodeError, CliffordError) as exc:
        ap.error(f"cannot read multivector: {exc}")
    try:
        dec = lounesto_decompose(psi)
    except SingularError as exc:
        print(f"decomposition undefined: {exc}", file=sys.stderr)
        return 1
    except CliffordError as exc:
        ap.error(str(exc))
    out = dec.to_json()
    out["reconstruction_residual"] = (dec.recompose() - psi).norm_inf()
    _emit(out)
    return 0


COMMANDS = {"verify": cmd_verify, "planewave": cmd_planewave, "table": cmd_table, "decompose": cmd_decompose}


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    return COMMANDS[args.command](args, ap)


if __name__ == "__main__":
    sys.exit(main())
