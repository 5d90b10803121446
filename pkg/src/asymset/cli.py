"""Command-line interface: asymset params|encode|decode|experiment|baseline|verify-bounds.

Exit codes: 0 success, 2 usage or format error, 3 decode failure (or a
failed bound check).
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import baseline, bounds, multilevel
from .experiment import ExperimentConfig, RetryBudgetExceeded, run_experiment
from .prior import load_prior, normalize_to_M

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DECODE = 3


class UsageError(Exception):
    pass


def _delta(text: str) -> Fraction:
    try:
        return multilevel.parse_delta(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _items(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad item list {text!r}") from None


def _emit(record: dict, as_json: bool, out=None) -> None:
    out = out or sys.stdout
    if as_json:
        json.dump(record, out, indent=2, sort_keys=True)
        out.write("\n")
        return
    for key, value in record.items():
        if isinstance(value, list) and value and isinstance(value[0], dict):
            out.write(f"{key}:\n")
            for row in value:
                out.write("  " + "  ".join(f"{k}={v}" for k, v in row.items()) + "\n")
        else:
            out.write(f"{key}: {value}\n")


def cmd_params(args) -> int:
    params = multilevel.derive_params(args.n, args.mstar, args.delta)
    _emit(params.as_dict(), args.json)
    return EXIT_OK


def cmd_encode(args) -> int:
    # no prior argument exists: the encoder is oblivious by construction
    params = multilevel.derive_params(args.n, args.mstar, args.delta)
    msg = multilevel.encode(params, args.seed, args.set)
    data = multilevel.to_bytes(params, args.seed, msg)
    with open(args.out, "wb") as fh:
        fh.write(data)
    _emit({"out": args.out, "items": sorted(set(args.set)), "total_bits": params.total_bits,
           "bytes": len(data)}, args.json)
    return EXIT_OK


def cmd_decode(args) -> int:
    with open(args.infile, "rb") as fh:
        data = fh.read()
    params, seed, msg = multilevel.from_bytes(data)
    loaded = load_prior(args.prior)
    if loaded.prior.N != params.N:
        raise UsageError(f"prior has N={loaded.prior.N}, message has N={params.N}")
    mu = normalize_to_M(loaded.prior)
    S_hat, diag = multilevel.decode(params, seed, mu, msg)
    record = {"items": list(S_hat), **diag.as_dict()}
    _emit(record, args.json)
    return EXIT_OK if diag.clean else EXIT_DECODE


def cmd_experiment(args) -> int:
    loaded = load_prior(args.prior)
    if args.n is not None and args.n != loaded.prior.N:
        raise UsageError(f"--n {args.n} disagrees with prior size {loaded.prior.N}")
    cfg = ExperimentConfig(loaded.prior, args.mstar, args.delta, args.k, args.trials, args.seed)
    report = run_experiment(cfg)
    record = report.as_dict()
    if args.out:
        with open(args.out, "w") as fh:
            _emit(record, True, fh)
    _emit(record, True)
    return EXIT_OK


def cmd_baseline(args) -> int:
    with open(args.list) as fh:
        L = baseline.parse_set_list(fh.read(), args.n)
    if not L:
        raise UsageError("set list is empty")
    report = baseline.run_baseline(args.n, args.m, L, args.trials, args.seed, args.mode)
    _emit(report.as_dict(), args.json)
    return EXIT_OK if report.passed else EXIT_DECODE


def cmd_verify_bounds(args) -> int:
    kind = args.check
    if kind == "list-mass":
        report = bounds.check_list_mass(load_prior(args.prior).prior)
    elif kind == "cover-size":
        sigma = bounds.GenericPrior.from_probs(load_prior(args.sigma).prior.probs)
        report = bounds.check_cover_entropy(sigma, float(args.delta))
    elif kind == "collision":
        enc = _builtin_encoder(args)
        pair = bounds.find_collision(enc, args.n, args.k, args.m)
        report = bounds.BoundReport(
            "collision", {"encoder": args.encoder, "N": args.n, "k": args.k, "m": args.m},
            {"pair": [list(S) for S in pair] if pair else None,
             "codeword": enc(pair[0]) if pair else None},
            True)
    elif kind == "huffman-tail":
        report = bounds.huffman_tail_check(load_prior(args.prior).prior, args.k,
                                           float(args.delta), args.trials, args.seed,
                                           args.eps)
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(kind)
    _emit(report.as_dict(), args.json)
    return EXIT_OK if report.passed else EXIT_DECODE


def _builtin_encoder(args):
    if args.encoder == "sum-mod":
        return bounds.sum_mod_encoder(args.m)
    if args.encoder == "linear":
        return bounds.random_linear_encoder(args.n, args.m, args.seed)
    return bounds.index_encoder(args.n, args.k)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="asymset", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def scheme_flags(p, need_n=True):
        p.add_argument("--n", type=int, required=need_n, help="universe size N")
        p.add_argument("--mstar", type=int, required=True, help="Huffman budget m* in bits")
        p.add_argument("--delta", type=_delta, required=True, help="error budget NUM/DEN")

    p = sub.add_parser("params", help="show derived per-level parameters")
    scheme_flags(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("encode", help="encode a set into an ASC1 message file")
    scheme_flags(p)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--set", type=_items, required=True, help="comma-separated items")
    p.add_argument("--out", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="decode an ASC1 message file with a prior")
    p.add_argument("--prior", required=True, help="prior file or uniform:N, zipf:N:s, dyadic:N")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("experiment", help="Monte-Carlo success rate of the scheme")
    scheme_flags(p, need_n=False)
    p.add_argument("--prior", required=True)
    p.add_argument("--k", type=int, required=True, help="draws per trial")
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.add_argument("--json", action="store_true", help="accepted; output is always JSON")
    p.set_defaults(func=cmd_experiment)

    p = sub.add_parser("baseline", help="random linear code vs its error bounds")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--list", required=True, help="one comma-separated set per line")
    p.add_argument("--mode", choices=("each", "forall"), default="each")
    p.add_argument("--trials", type=int, default=10_000, help="number of code seeds")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_baseline)

    p = sub.add_parser("verify-bounds", help="check the lower bound and appendix claims")
    p.add_argument("check", choices=("list-mass", "cover-size", "collision", "huffman-tail"))
    p.add_argument("--prior")
    p.add_argument("--sigma", help="outcome distribution for cover-size")
    p.add_argument("--delta", type=_delta)
    p.add_argument("--encoder", choices=("sum-mod", "linear", "index"), default="sum-mod")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--trials", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--eps", type=float, default=1.0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify_bounds)
    return ap


_REQUIRED = {
    "list-mass": ("prior",),
    "cover-size": ("sigma", "delta"),
    "collision": ("n", "k", "m"),
    "huffman-tail": ("prior", "k", "delta"),
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify-bounds":
        missing = [f"--{f}" for f in _REQUIRED[args.check] if getattr(args, f) is None]
        if missing:
            parser.error(f"verify-bounds {args.check} needs {', '.join(missing)}")
    try:
        return args.func(args)
    except (UsageError, ValueError, OSError, RetryBudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
