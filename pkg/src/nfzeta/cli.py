"""Command-line interface: field inspection, experiments, database ingestion.

Exit codes (also shown in --help):
  0  success
  2  invalid arguments or validation failure (argparse uses 2 as well)
  3  computation or driver failure during the run
  4  data source unreachable or unusable (transport/decode)

Offline invocations are deterministic: identical commands produce identical
bytes on stdout and in --out files.  Floats print with 12 significant digits.
"""

from __future__ import annotations

import argparse
import os
import sys

from .analytic import EvalPoint, dedekind_zeta_pole_removed, euler_kronecker
from .classdata import class_data_imaginary, class_data_real, residue_kappa
from .dbclient import (
    ClientConfig,
    DecodeError,
    QuerySpec,
    TransportError,
    fetch,
    load_config,
    to_descriptor,
)
from .family import (
    CyclotomicPrimePower,
    FamilySpec,
    ImaginaryQuadratic,
    IngestedFamily,
    RealQuadratic,
    SplitConstrained,
    Synthetic,
    TVInvariants,
    run_brauer_siegel,
    run_ek,
    run_theorem1,
    run_theorem2,
)
from .numberfield import (
    Cyclotomic,
    Quadratic,
    field_id,
    field_invariants,
    splitting_profile,
)

_EXIT_OK = 0
_EXIT_USAGE = 2
_EXIT_COMPUTE = 3
_EXIT_SOURCE = 4

_EPILOG = """\
exit codes:
  0  success
  2  invalid arguments or validation failure
  3  computation or driver failure
  4  data source unreachable or unusable (transport/decode)
"""


def _g(x: float) -> str:
    return "%.12g" % x


# --------------------------------------------------------------------------
# field-info
# --------------------------------------------------------------------------


def _cmd_field_info(args) -> int:
    try:
        if args.quadratic is not None:
            F = Quadratic(args.quadratic)
        else:
            F = Cyclotomic(args.cyclotomic)
        inv = field_invariants(F)
        pt = EvalPoint(1.0, args.precision)
    except (ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_USAGE
    try:
        prof = splitting_profile(F, args.bound)
        lines = [
            f"field: {field_id(F)}",
            f"D={inv.discriminant}, n={inv.degree}, "
            f"signature=({inv.signature[0]},{inv.signature[1]}), g={_g(inv.genus)}",
        ]
        for q in sorted(prof.counts):
            lines.append(f"Phi[{q}]={prof.counts[q]}")
        if isinstance(F, Quadratic):
            D = inv.discriminant
            cd = class_data_imaginary(D) if D < 0 else class_data_real(D, args.precision)
            kappa = residue_kappa(inv, cd).kappa
            lines.append(f"h={cd.h}, w={cd.w}, R={_g(cd.R)}")
        else:
            kappa = float(dedekind_zeta_pole_removed(F, pt).real)
        lines.append(f"kappa={_g(kappa)}")
        lines.append(f"gamma_K={_g(euler_kronecker(F))}")
    except Exception as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_COMPUTE
    print("\n".join(lines))
    return _EXIT_OK


# --------------------------------------------------------------------------
# experiment
# --------------------------------------------------------------------------


def _parse_phi(items) -> dict:
    phi = {}
    for item in items or []:
        try:
            q_text, v_text = item.split("=", 1)
            phi[int(q_text)] = float(v_text)
        except ValueError as exc:
            raise ValueError(f"--phi expects q=value, got {item!r}") from exc
    return phi


def _build_family_spec(args) -> FamilySpec:
    window = tuple(args.window) if args.window else None
    if args.family == "synthetic":
        phi = _parse_phi(args.phi)
        bound = args.bound if not phi else max(args.bound, max(phi))
        tv = TVInvariants(
            phi_R=args.phi_r, phi_C=args.phi_c, phi=phi, bound_X=bound
        )
        return FamilySpec(Synthetic(tv), 1)
    if args.family == "imaginary-quadratic":
        gen = ImaginaryQuadratic(window=window)
    elif args.family == "real-quadratic":
        gen = RealQuadratic(window=window)
    elif args.family == "split-constrained":
        if not args.split_primes:
            raise ValueError("--split-primes is required for split-constrained")
        gen = SplitConstrained(tuple(args.split_primes), window=window)
    elif args.family == "cyclotomic":
        gen = CyclotomicPrimePower(args.p)
    elif args.family == "ingested":
        cfg = _client_config(args)
        query = QuerySpec(
            degree=args.degree,
            abs_disc_min=args.min_abs_disc,
            abs_disc_max=args.max_abs_disc,
            max_records=args.max_records,
        )
        result = fetch(query, cfg)
        descriptors = tuple(to_descriptor(r) for r in result.records)
        gen = IngestedFamily(descriptors)
        count = args.count if args.count is not None else max(1, len(descriptors))
        return FamilySpec(gen, count)
    else:  # pragma: no cover - argparse choices prevent this
        raise ValueError(f"unknown family {args.family}")
    if args.count is not None:
        count = args.count
    elif window is not None:
        count = 10**6  # take everything the window holds
    else:
        count = 10
    return FamilySpec(gen, count)


def _cmd_experiment(args) -> int:
    try:
        spec = _build_family_spec(args)
        s = complex(args.s.replace("i", "j")) if args.s is not None else 1.5
        if s.imag == 0:
            s = s.real
        if args.theorem == "main1" and (not complex(s).real > 0.5 or complex(s) == 1):
            raise ValueError("main1 needs Re s > 1/2 and s != 1")
    except (TransportError, DecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_SOURCE
    except (ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_USAGE
    try:
        if args.theorem == "main1":
            table = run_theorem1(spec, s, X=args.bound, jobs=args.jobs)
        elif args.theorem == "main2":
            table = run_theorem2(spec, X=args.bound, jobs=args.jobs)
        elif args.theorem == "ek":
            table = run_ek(spec, X=args.bound, jobs=args.jobs)
        else:  # tvz
            table = run_brauer_siegel(spec, X=args.bound, jobs=args.jobs)
    except Exception as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_COMPUTE
    text = table.to_json() if args.format == "json" else table.to_csv()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    meta = table.metadata
    summary = [f"theorem={table.theorem}", f"rows={len(table.rows)}"]
    for key in ("N", "errors", "excluded_near_zero", "excluded_no_class_data"):
        if key in meta:
            summary.append(f"{key}={meta[key]}")
    if args.out:
        summary.append(f"out={args.out}")
    print("summary: " + " ".join(summary), file=sys.stderr)
    return _EXIT_OK


# --------------------------------------------------------------------------
# ingest
# --------------------------------------------------------------------------


def _client_config(args) -> ClientConfig:
    cfg = load_config(path=getattr(args, "config", None))
    overrides = {}
    if getattr(args, "base_url", None) is not None:
        overrides["base_url"] = args.base_url
        overrides["offline"] = False
    if getattr(args, "cache_dir", None) is not None:
        overrides["cache_dir"] = args.cache_dir
    if getattr(args, "offline", None) is not None:
        overrides["offline"] = args.offline == "true"
    if overrides:
        cfg = ClientConfig(
            base_url=overrides.get("base_url", cfg.base_url),
            cache_dir=overrides.get("cache_dir", cfg.cache_dir),
            offline=overrides.get("offline", cfg.offline),
            timeout_seconds=cfg.timeout_seconds,
        )
    return cfg


def _cmd_ingest(args) -> int:
    try:
        cfg = _client_config(args)
        query = QuerySpec(
            degree=args.degree,
            abs_disc_min=args.min_abs_disc,
            abs_disc_max=args.max_abs_disc,
            signature=tuple(args.signature) if args.signature else None,
            page_size=args.page_size,
            max_records=args.max_records,
        )
    except (ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_USAGE
    try:
        result = fetch(query, cfg)
        for rec in result.records:
            to_descriptor(rec)  # validation gate: every returned record converts
    except (TransportError, DecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_SOURCE
    except Exception as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_COMPUTE
    print(
        f"{len(result.records)} fetched ({result.dropped} dropped, "
        f"truncated={str(result.truncated).lower()}, source={result.source})"
    )
    return _EXIT_OK


# --------------------------------------------------------------------------
# parser
# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nfzeta",
        description="Number-field invariants, zeta values, and family experiments.",
        epilog=_EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_info = sub.add_parser(
        "field-info",
        help="discriminant, signature, genus, splitting counts, class data",
        epilog=_EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    kind = p_info.add_mutually_exclusive_group(required=True)
    kind.add_argument("--quadratic", type=int, metavar="M", help="Q(sqrt(M)), M squarefree")
    kind.add_argument("--cyclotomic", type=int, metavar="N", help="Q(zeta_N)")
    p_info.add_argument("--bound", type=int, default=10, metavar="X", help="splitting-count bound (default 10)")
    p_info.add_argument("--precision", type=float, default=1e-12, help="evaluation precision target")
    p_info.set_defaults(func=_cmd_field_info)

    p_exp = sub.add_parser(
        "experiment",
        help="run a family experiment and emit its table",
        epilog=_EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    p_exp.add_argument("theorem", choices=("tvz", "main1", "main2", "ek"))
    p_exp.add_argument(
        "--family",
        required=True,
        choices=(
            "imaginary-quadratic",
            "real-quadratic",
            "split-constrained",
            "cyclotomic",
            "ingested",
            "synthetic",
        ),
    )
    p_exp.add_argument("--count", type=int, default=None, help="fields to take (default: window contents, else 10)")
    p_exp.add_argument("--window", type=int, nargs=2, metavar=("LO", "HI"), help="discriminant window")
    p_exp.add_argument("--split-primes", type=int, nargs="+", metavar="P", help="primes forced to split")
    p_exp.add_argument("--p", type=int, default=2, help="prime for the cyclotomic ladder")
    p_exp.add_argument("--phi", action="append", metavar="Q=V", help="synthetic phi_q entries, repeatable")
    p_exp.add_argument("--phi-r", type=float, default=0.0, help="synthetic phi_R")
    p_exp.add_argument("--phi-c", type=float, default=0.0, help="synthetic phi_C")
    p_exp.add_argument("-s", default=None, help="evaluation point for main1 (default 1.5)")
    p_exp.add_argument("--bound", type=int, default=100, metavar="X", help="prime-power bound for invariants")
    p_exp.add_argument("--jobs", type=int, default=os.cpu_count() or 1, help="worker processes (default: all cores)")
    p_exp.add_argument("--out", default=None, help="write the table here instead of stdout")
    p_exp.add_argument("--format", choices=("csv", "json"), default="csv")
    p_exp.add_argument("--degree", type=int, default=None, help="ingested-family degree filter")
    p_exp.add_argument("--min-abs-disc", type=int, default=2, help="ingested |D| lower bound")
    p_exp.add_argument("--max-abs-disc", type=int, default=None, help="ingested |D| upper bound")
    p_exp.add_argument("--max-records", type=int, default=1000, help="ingested record cap")
    p_exp.add_argument("--config", default=None, help="client config file (JSON)")
    p_exp.add_argument("--base-url", default=None, help="override data source URL")
    p_exp.add_argument("--cache-dir", default=None, help="override cache directory")
    p_exp.add_argument("--offline", choices=("true", "false"), default=None)
    p_exp.set_defaults(func=_cmd_experiment)

    p_ing = sub.add_parser(
        "ingest",
        help="fetch records into the validated cache",
        epilog=_EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    p_ing.add_argument("--degree", type=int, default=None)
    p_ing.add_argument("--min-abs-disc", type=int, default=2)
    p_ing.add_argument("--max-abs-disc", type=int, default=None)
    p_ing.add_argument("--signature", type=int, nargs=2, metavar=("R1", "R2"), default=None)
    p_ing.add_argument("--page-size", type=int, default=100)
    p_ing.add_argument("--max-records", type=int, default=1000)
    p_ing.add_argument("--config", default=None, help="client config file (JSON)")
    p_ing.add_argument("--base-url", default=None, help="override data source URL")
    p_ing.add_argument("--cache-dir", default=None, help="override cache directory")
    p_ing.add_argument("--offline", choices=("true", "false"), default=None)
    p_ing.set_defaults(func=_cmd_ingest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
