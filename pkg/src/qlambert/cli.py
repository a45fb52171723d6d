"""Command-line front end.

Subcommands:
  verify      run one or all registered identities
  coeffs      print the coefficients (or the JSON spec) of a named series
  congruence  check pwbar_count over an arithmetic progression
  oracle      cross-check the series engine against independent oracles
  list        print the identity registry

Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 usage error.
Structured output goes to stdout; failure details go to stderr.  Big
coefficients are printed as decimal strings in JSON and CSV so consumers
never truncate them to 64 bits.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import identities, lambert, naive, partitions
from .qproducts import E_SPEC, E_series, omega_series
from .series import TruncSeries

SERIES_BUILDERS = {
    "Y": lambert.Y_series,
    "X": lambert.X_series,
    "Z": lambert.Z_series,
    "A": lambert.A_series,
    "N": lambert.N_series,
    "D": lambert.D_series,
    "L": lambert.L_series,
    "E": E_series,
    "omega": omega_series,
    "L_closed": lambda n: lambert.lambert_single(lambert.L_CLOSED_SPEC, n),
    "step10_lhs": lambda n: lambert.lambert_single(lambert.STEP10_SPEC, n),
    "step11_lhs": lambda n: lambert.lambert_single(lambert.STEP11_SPEC, n),
}


def _series_spec_dict(name: str):
    if name in lambert.NAMED_SPECS:
        return lambert.NAMED_SPECS[name].as_dict()
    if name == "E":
        return E_SPEC.as_dict()
    return None


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qlambert", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="verify one or all identities")
    p.add_argument("--identity", help="registry name, e.g. id.main (default: all)")
    p.add_argument("--order", type=int, default=100)
    p.add_argument("--format", choices=("table", "json", "csv"), default="table")

    p = sub.add_parser("coeffs", help="print coefficients of a named series")
    p.add_argument("--series", required=True, choices=sorted(SERIES_BUILDERS))
    p.add_argument("--order", type=int, default=100)
    p.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p.add_argument("--spec", action="store_true",
                   help="print the JSON spec behind the series instead of coefficients")

    p = sub.add_parser("congruence", help="scan pwbar_count over a progression")
    p.add_argument("--progression", required=True, metavar="M,r",
                   help="arithmetic progression: modulus,residue")
    p.add_argument("--mod", type=int, required=True, help="divisor modulus m")
    p.add_argument("--max", type=int, default=60, dest="bound")
    p.add_argument("--format", choices=("table", "json", "csv"), default="table")

    p = sub.add_parser("oracle", help="cross-check against independent oracles")
    p.add_argument("--compare", required=True, choices=("pw-omega", "lambert-naive"))
    p.add_argument("--max", type=int, default=60, dest="bound")

    sub.add_parser("list", help="print the identity registry")
    return parser


def _emit_coeffs(series: TruncSeries, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(series.to_decimal_strings()))
    elif fmt == "csv":
        print("exponent,coefficient")
        for e, c in enumerate(series.coeffs):
            print(f"{e},{c}")
    else:
        for e, c in enumerate(series.coeffs):
            print(f"q^{e:<6} {c}")


def _emit_reports(reports, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps([r.as_dict() for r in reports]))
    elif fmt == "csv":
        print("identity,order,status,mismatch_exponent")
        for r in reports:
            e = "" if r.first_mismatch is None else r.first_mismatch[0]
            print(f"{r.name},{r.order},{r.status},{e}")
    else:
        for r in reports:
            line = f"{r.status.upper():4} {r.name} (order {r.order}, {r.elapsed_ms} ms)"
            print(line)


def _cmd_verify(args) -> int:
    if args.identity is not None:
        try:
            reports = [identities.verify(args.identity, args.order)]
        except identities.UnknownIdentity:
            print(f"unknown identity: {args.identity}", file=sys.stderr)
            return 2
    else:
        reports = identities.verify_all(args.order)
    _emit_reports(reports, args.format)
    failed = [r for r in reports if not r.ok]
    for r in failed:
        e, lv, rv = r.first_mismatch
        print(f"{r.name}: first mismatch at q^{e}: lhs={lv} rhs={rv}", file=sys.stderr)
    return 1 if failed else 0


def _cmd_coeffs(args) -> int:
    if args.spec:
        spec = _series_spec_dict(args.series)
        if spec is None:
            print(f"no declarative spec for series {args.series}", file=sys.stderr)
            return 2
        print(json.dumps(spec))
        return 0
    series = SERIES_BUILDERS[args.series](args.order)
    _emit_coeffs(series, args.format)
    return 0


def _cmd_congruence(args) -> int:
    try:
        modulus_str, residue_str = args.progression.split(",")
        modulus, residue = int(modulus_str), int(residue_str)
    except ValueError:
        print("--progression expects 'modulus,residue'", file=sys.stderr)
        return 2
    try:
        report = partitions.congruence_scan(residue, modulus, args.mod, args.bound)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    if args.format == "json":
        print(json.dumps(report.as_json()))
    elif args.format == "csv":
        print("n,value,residue,pass")
        for e in report.entries:
            print(f"{e.n},{e.value},{e.residue},{str(e.ok).lower()}")
    else:
        for e in report.entries:
            verdict = "ok" if e.ok else "FAIL"
            print(f"n={e.n:<4} value={e.value:<12} mod {args.mod} -> {e.residue}  {verdict}")
    failures = [e for e in report.entries if not e.ok]
    for e in failures:
        print(f"congruence fails at n={e.n}: value {e.value} != 0 mod {args.mod}",
              file=sys.stderr)
    return 1 if failures else 0


def _cmd_oracle(args) -> int:
    if args.compare == "pw-omega":
        report = partitions.pw_omega_crosscheck(args.bound)
        if report.ok:
            print(f"pw-omega: enumeration matches q*omega(q) for 1..{args.bound}")
            return 0
        n, enum_v, series_v = report.first_mismatch
        print(f"pw-omega mismatch at n={n}: enumeration={enum_v} series={series_v}",
              file=sys.stderr)
        return 1
    # lambert-naive: every named builder vs the long-division oracle
    failed = False
    for name, naive_builder in sorted(naive.NAIVE_BUILDERS.items()):
        engine = list(SERIES_BUILDERS[name](args.bound).coeffs)
        reference = naive_builder(args.bound)
        if engine == reference:
            print(f"lambert-naive: {name} agrees to order {args.bound}")
        else:
            failed = True
            e = next(i for i in range(args.bound + 1) if engine[i] != reference[i])
            print(f"lambert-naive mismatch for {name} at q^{e}: "
                  f"engine={engine[e]} naive={reference[e]}", file=sys.stderr)
    return 1 if failed else 0


def _cmd_list(args) -> int:
    for record in identities.registry():
        print(f"{record.name:<12} [{record.mode}] {record.description}")
    return 0


def run(argv) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 0 for --help, 2 for usage errors
        return int(exc.code or 0)
    if args.command == "verify":
        return _cmd_verify(args)
    if args.command == "coeffs":
        return _cmd_coeffs(args)
    if args.command == "congruence":
        return _cmd_congruence(args)
    if args.command == "oracle":
        return _cmd_oracle(args)
    return _cmd_list(args)


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
