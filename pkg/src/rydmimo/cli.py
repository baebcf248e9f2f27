"""Command-line sweep runner.

Usage::

    simulate --config <file> [--experiment farfield|nearfield]
             [--out <csv>] [--seed <u64>] [--trials <n>] [--snr-db <f>]

Flags override values from the config file.  The CSV goes to --out, or
to stdout when --out is omitted.  Exit codes: 0 success, 2 config
error, 3 numerical error.
"""

import argparse
import sys

from .errors import ConfigError, NumericalError
from .experiments import emit_csv, format_csv, load_config, run


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="simulate",
        description="Run a capacity sweep and emit CSV results.",
    )
    parser.add_argument("--config", required=True, help="key = value sweep config file")
    parser.add_argument(
        "--experiment", choices=("farfield", "nearfield"),
        help="override the experiment kind from the config",
    )
    parser.add_argument("--out", help="output CSV path (default: stdout)")
    parser.add_argument("--seed", type=int, help="override the RNG seed")
    parser.add_argument("--trials", type=int, help="override the Monte Carlo trial count")
    parser.add_argument(
        "--snr-db", type=float, dest="snr_db", help="override the SNR in dB"
    )
    return parser


def main(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        cfg = load_config(
            args.config,
            experiment=args.experiment,
            seed=args.seed,
            trials=args.trials,
            snr_db=args.snr_db,
        )
        result = run(cfg)
    except ConfigError as exc:
        print(f"simulate: config error: {exc}", file=sys.stderr)
        return 2
    except NumericalError as exc:
        print(f"simulate: numerical error: {exc}", file=sys.stderr)
        return 3
    if args.out:
        try:
            emit_csv(result, args.out)
        except OSError as exc:
            print(f"simulate: cannot write {args.out}: {exc}", file=sys.stderr)
            return 1
    else:
        sys.stdout.write(format_csv(result))
    return 0


if __name__ == "__main__":
    sys.exit(main())
