"""Command-line interface.

Exit codes: 0 success / all commute, 1 witness found or algorithm mismatch,
2 parse or input error, 3 weight-cap violation. Machine-readable
``key=value`` output goes to stdout, human summaries to stderr. Qubit
indices are 0-based.
"""

from __future__ import annotations

import argparse
import sys

from . import bench
from .baseline import pairwise_count
from .engine import certify, count_all_anticommuting_pairs
from .errors import CorpusParseError, InvalidSpec
from .table import BACKEND, DEFAULT_WEIGHT_CAP, available_backends
from .workload import InstanceSpec, generate, read_corpus, serialize

EXIT_OK = 0
EXIT_WITNESS = 1
EXIT_MISMATCH = 1
EXIT_PARSE = 2
EXIT_CAP = 3


def _int_list(text):
    return [int(float(x)) for x in text.split(",") if x]


def _backend(args):
    return None if args.backend == "auto" else args.backend


def _err(msg):
    print(f"error: {msg}", file=sys.stderr)


def _load(args):
    """Return the corpus, or an exit code after reporting the problem."""
    try:
        corpus = read_corpus(args.input, args.format)
    except CorpusParseError as exc:
        _err(str(exc))
        return EXIT_PARSE
    except OSError as exc:
        _err(str(exc))
        return EXIT_PARSE
    for s, line in zip(corpus.strings, corpus.line_numbers):
        if s.weight > args.weight_cap:
            _err(f"line {line}: weight {s.weight} exceeds weight cap {args.weight_cap}")
            return EXIT_CAP
    return corpus


def _emit_report(report):
    print(f"m={report.m}")
    print(f"T={report.total_anti_pairs}")
    print(f"dict_updates={report.counters.dict_updates}")
    print(f"dict_lookups={report.counters.dict_lookups}")
    print(f"elapsed_s={report.elapsed:.6f}")
    print(f"backend={report.backend}")


def cmd_count(args):
    corpus = _load(args)
    if isinstance(corpus, int):
        return corpus
    report = count_all_anticommuting_pairs(corpus.strings, args.weight_cap, _backend(args))
    _emit_report(report)
    print(f"counted {report.total_anti_pairs} anticommuting pairs among {report.m} strings "
          f"in {report.elapsed:.3f}s", file=sys.stderr)
    return EXIT_OK


def cmd_certify(args):
    corpus = _load(args)
    if isinstance(corpus, int):
        return corpus
    report = certify(corpus.strings, args.weight_cap, _backend(args))
    if report.witness is None:
        print("ALL-COMMUTE")
        _emit_report(report)
        print(f"all {report.m} strings commute pairwise", file=sys.stderr)
        return EXIT_OK
    i, j = report.witness
    print(f"WITNESS {i} {j}")
    _emit_report(report)
    print(f"strings {i} (line {corpus.line_numbers[i]}) and {j} (line {corpus.line_numbers[j]}) "
          f"anticommute", file=sys.stderr)
    return EXIT_WITNESS


def cmd_compare(args):
    backend = _backend(args)
    mismatches = 0
    for trial in range(args.trials):
        seed = bench.trial_seed(args.seed, trial)
        spec = InstanceSpec(args.m, args.n, args.k, args.weight_dist, seed)
        try:
            strings = generate(spec)
        except InvalidSpec as exc:
            _err(str(exc))
            return EXIT_PARSE
        z = bench.run_zeta(strings, spec, backend, weight_cap=args.weight_cap)
        b = bench.run_baseline(strings, spec, backend)
        agree = z.T == b.T
        print(f"trial={trial} seed={seed} m={args.m} n={args.n} k={args.k} "
              f"T_zeta={z.T} T_baseline={b.T} agree={int(agree)} "
              f"zeta_s={z.elapsed_s:.6f} baseline_s={b.elapsed_s:.6f} "
              f"dict_updates={z.dict_updates} dict_lookups={z.dict_lookups} "
              f"pair_tests={b.pair_tests}")
        if not agree:
            mismatches += 1
            lo, hi = bench.minimize_mismatch(
                strings,
                lambda part: count_all_anticommuting_pairs(part, args.weight_cap, backend).total_anti_pairs,
                lambda part: pairwise_count(part, backend),
            )
            print(f"MISMATCH trial={trial} seed={seed} m={args.m} n={args.n} k={args.k} "
                  f"weight_dist={args.weight_dist} range={lo}:{hi}")
    if mismatches:
        _err(f"{mismatches} of {args.trials} trials disagree")
        return EXIT_MISMATCH
    print(f"all {args.trials} trials agree", file=sys.stderr)
    return EXIT_OK


def cmd_bench(args):
    if args.backend == "both":
        backends = available_backends()
    else:
        backends = [_backend(args)]
    try:
        for row in bench.sweep(args.m_list, args.k_list, args.n, args.seed, args.weight_dist,
                               backends, args.repeats, args.baseline_max_m, args.weight_cap):
            print(row.format(), flush=True)
            print(f"{row.algorithm:8s} {row.backend:6s} m={row.m:<8d} k={row.k} "
                  f"{row.elapsed_s:10.4f}s T={row.T}", file=sys.stderr)
    except InvalidSpec as exc:
        _err(str(exc))
        return EXIT_PARSE
    return EXIT_OK


def cmd_gen(args):
    spec = InstanceSpec(args.m, args.n, args.k, args.weight_dist, args.seed)
    try:
        strings = generate(spec)
    except InvalidSpec as exc:
        _err(str(exc))
        return EXIT_PARSE
    out = open(args.output, "w", encoding="utf-8", newline="\n") if args.output else sys.stdout
    try:
        out.write(f"# m={spec.m} n={spec.n} k={spec.k} weight_dist={spec.weight_dist} "
                  f"seed={spec.seed}\n")
        for s in strings:
            out.write(serialize(s, args.format, spec.n if args.format == "dense" else None) + "\n")
    finally:
        if args.output:
            out.close()
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="paulizeta",
        description="Anticommutation counting and commutation certification for sparse "
                    "k-local Pauli strings (qubit indices are 0-based).",
    )
    cap = argparse.ArgumentParser(add_help=False)
    cap.add_argument("--weight-cap", type=int, default=DEFAULT_WEIGHT_CAP,
                     help="maximum string weight accepted (default: %(default)s)")
    common = argparse.ArgumentParser(add_help=False, parents=[cap])
    common.add_argument("--backend", choices=["auto", "ext", "python"], default="auto",
                        help=f"kernel backend (default: auto, currently {BACKEND})")

    spec = argparse.ArgumentParser(add_help=False)
    spec.add_argument("--n", type=int, default=256, help="qubit index range (default: %(default)s)")
    spec.add_argument("--seed", type=int, default=0, help="64-bit seed (default: %(default)s)")
    spec.add_argument("--weight-dist", choices=["fixed", "uniform"], default="uniform",
                      help="weight k for every string, or uniform in 1..k (default: %(default)s)")

    sub = parser.add_subparsers(dest="command", required=True)

    for name, fn, text in (
        ("count", cmd_count, "count unordered anticommuting pairs"),
        ("certify", cmd_certify, "certify that all strings commute, or print a witness"),
    ):
        p = sub.add_parser(name, parents=[common], help=text, description=text)
        p.add_argument("input", help="corpus file")
        p.add_argument("--format", choices=["auto", "dense", "sparse"], default="auto",
                       help="corpus format (default: %(default)s)")
        p.set_defaults(func=fn)

    p = sub.add_parser("compare", parents=[common, spec],
                       help="check the zeta count against the pairwise baseline on random instances")
    p.add_argument("--m", type=int, default=1000, help="strings per instance (default: %(default)s)")
    p.add_argument("--k", type=int, default=4, help="maximum weight (default: %(default)s)")
    p.add_argument("--trials", type=int, default=10, help="instances; trial t uses seed+t (default: %(default)s)")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("bench", parents=[cap, spec], help="timing and counter sweep over m and k")
    p.set_defaults(weight_dist="fixed")
    p.add_argument("--backend", choices=["auto", "ext", "python", "both"], default="auto",
                   help="kernel backend(s) to benchmark (default: %(default)s)")
    p.add_argument("--m-list", type=_int_list, default=[1000, 2000, 4000],
                   help="comma-separated string counts (default: 1000,2000,4000)")
    p.add_argument("--k-list", type=_int_list, default=[4],
                   help="comma-separated weights (default: 4)")
    p.add_argument("--repeats", type=int, default=1, help="runs per cell, minimum time kept")
    p.add_argument("--baseline-max-m", type=int, default=20000,
                   help="skip the baseline above this m (default: %(default)s)")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("gen", parents=[spec], help="write a random corpus")
    p.add_argument("--m", type=int, default=1000)
    p.add_argument("--k", type=int, default=4)
    p.add_argument("--format", choices=["dense", "sparse"], default="sparse")
    p.add_argument("--output", "-o", help="output path (default: stdout)")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
