"""
Command-line front end.

    zn-fejer kernel --n 101 --r 5
    zn-fejer symbol --n 64 --r 8 --format json
    zn-fejer discrepancy --n 101 --size 50 --r 5 --r 10 --r 20 --trials 100 --seed 42

Exit status: 0 on success, 2 on a parameter error, 1 if a proved bound fails.
"""
import argparse
import sys

from .exceptions import InvariantViolation, ParameterError
from .experiments import FORMATS, ExperimentConfig, dump_kernel, emit_report, run_experiment
from .fejer_kernel import KernelSpec

EXIT_OK = 0
EXIT_INVARIANT = 1
EXIT_PARAMETER = 2


def _u64(text):
    value = int(text, 0)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return value


def build_parser():
    parser = argparse.ArgumentParser(
        prog="zn-fejer",
        description="Triangular Fejer kernel and smoothed discrepancy on Z/NZ.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--n", type=int, default=101, help="group order N (default 101)")
        p.add_argument("--format", choices=FORMATS, default="csv")
        p.add_argument("--out", default="-", help="output path, '-' for stdout")

    for name, help_text in (
        ("kernel", "tabulate F_r(n) and its Fourier symbol"),
        ("symbol", "tabulate the Fourier symbol of F_r only"),
    ):
        p = sub.add_parser(name, help=help_text)
        common(p)
        p.add_argument("--r", type=int, required=True, help="smoothing radius")

    p = sub.add_parser("discrepancy", help="random-subset smoothed discrepancy experiment")
    common(p)
    p.add_argument("--r", type=int, action="append", help="smoothing radius (repeatable)")
    p.add_argument("--size", type=int, default=50, help="subset size |A|")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=_u64, default=42)
    p.add_argument("--workers", type=int, default=1, help="worker threads; output is unaffected")
    return parser


def _write(text, path):
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        if args.command in ("kernel", "symbol"):
            spec = KernelSpec(args.n, args.r)
            tables = ("kernel", "symbol") if args.command == "kernel" else ("symbol",)
            text = dump_kernel(spec, args.format, tables=tables)
        else:
            config = ExperimentConfig(
                N=args.n,
                subset_size=args.size,
                radii=tuple(args.r) if args.r else (5, 10, 20),
                trials=args.trials,
                seed=args.seed,
                output_format=args.format,
            )
            if args.workers < 1:
                raise ParameterError("workers must be >= 1")
            reports = run_experiment(config, workers=args.workers)
            text = emit_report(reports, config.output_format, config=config)
    except ParameterError as exc:
        print(f"zn-fejer: error: {exc}", file=sys.stderr)
        return EXIT_PARAMETER
    except InvariantViolation as exc:
        print(f"zn-fejer: invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    _write(text, args.out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
