"""
Main entry point for the command line.

Subcommands:
- gen: write a generated hypergraph file
- find: run the partite search and write a witness file
- verify: check a witness against a hypergraph
- oracle: print the brute-force maximum balanced part size
- bench: runtime-scaling benchmark as CSV
- params: print the search parameters of a hypergraph

Exit codes: 0 success, 1 input error, 2 negative result.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import NoReturn

from src import __version__
from src.core import logger
from src.core.config import get_config, reload_config
from src.core.errors import (
    FormatError,
    InstanceTooLarge,
    InternalInvariantViolation,
    InvalidArguments,
    NoEdges,
    PartiteError,
    WitnessNotFound,
)
from src.core.finder import find_partite, find_partite_forced, trim_balanced
from src.core.formats import (
    parse_hypergraph,
    parse_witness,
    render_witness,
    write_hypergraph,
)
from src.core.generators import GenKind, GenSpec, generate
from src.core.hypergraph import Hypergraph
from src.core.parameters import derive_params, forced_params
from src.core.validators import parse_fraction
from src.core.verifier import find_violation, max_balanced_partite_bruteforce


EXIT_OK = 0
EXIT_INPUT = 1
EXIT_NEGATIVE = 2

KIND_FLAGS = {
    "complete": GenKind.COMPLETE,
    "empty": GenKind.EMPTY,
    "binomial": GenKind.BINOMIAL,
    "exact-m": GenKind.EXACT_M,
    "planted": GenKind.PLANTED,
}


class CliParser(argparse.ArgumentParser):
    """Argument parser whose usage errors exit with the input-error code."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _fail(message: str, code: int = EXIT_INPUT) -> int:
    """Report an error to the user and return the exit code."""
    print(f"kpartite: {message}", file=sys.stderr)
    logger.debug(f"exit {code}: {message}")
    return code


def _log_level(verbose: int) -> str:
    """-v raises the level to INFO, -vv to DEBUG."""
    if verbose > 1:
        return "DEBUG"
    if verbose == 1:
        return "INFO"
    return get_config().log.level


def _read_text(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _write_output(text: str, path: str | None) -> None:
    if path:
        Path(path).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _load_hypergraph(path: str) -> Hypergraph:
    hypergraph = parse_hypergraph(_read_text(path))
    logger.info(f"Loaded {hypergraph!r} from {path}")
    return hypergraph


def _print_explain(lines: list[str]) -> None:
    for line in lines:
        print(line, file=sys.stderr)


def cmd_gen(args: argparse.Namespace) -> int:
    """Render a generated instance."""
    p = None
    if args.p is not None:
        p = parse_fraction(args.p)
        if p is None:
            return _fail(f"invalid probability {args.p!r}")

    spec = GenSpec(
        kind=KIND_FLAGS[args.kind],
        n=args.n,
        k=args.k,
        p=p,
        m=args.m,
        part_size=args.part_size,
        noise_removals=args.noise,
        seed=args.seed,
    )
    is_valid, message = spec.validate()
    if not is_valid:
        return _fail(message)

    hypergraph = generate(spec)
    if args.out:
        with Path(args.out).open("w", encoding="utf-8", newline="\n") as stream:
            write_hypergraph(hypergraph, stream)
    else:
        write_hypergraph(hypergraph, sys.stdout)
    return EXIT_OK


def cmd_find(args: argparse.Namespace) -> int:
    """Run the search and write the witness."""
    hypergraph = _load_hypergraph(args.input)

    if args.forced_t is not None:
        if args.explain and hypergraph.k >= 2:
            _print_explain(forced_params(hypergraph, args.forced_t).explain())
        witness, trace = find_partite_forced(hypergraph, args.forced_t)
        target: int | None = args.forced_t
    else:
        params = derive_params(hypergraph) if hypergraph.k >= 2 else None
        if args.explain and params is not None:
            _print_explain(params.explain())
        witness, trace = find_partite(hypergraph)
        if params is None:
            target = None
        else:
            target = 1 if trace.fallback else params.t

    if target is not None and not args.no_trim:
        witness = trim_balanced(witness, target)

    _write_output(render_witness(witness.parts), args.out)
    if args.trace:
        Path(args.trace).write_text(trace.to_json() + "\n", encoding="utf-8")
    logger.info(f"Witness part sizes: {witness.sizes}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    """Check a witness file against a hypergraph file."""
    hypergraph = _load_hypergraph(args.input)
    parts = parse_witness(_read_text(args.witness))

    violation = find_violation(hypergraph, parts)
    if violation is None:
        print("VALID")
        return EXIT_OK

    print(f"INVALID: {violation.describe()}")
    return EXIT_NEGATIVE


def cmd_oracle(args: argparse.Namespace) -> int:
    """Print the brute-force maximum balanced part size."""
    hypergraph = _load_hypergraph(args.input)
    print(max_balanced_partite_bruteforce(hypergraph))
    return EXIT_OK


def cmd_params(args: argparse.Namespace) -> int:
    """Print the search parameters."""
    hypergraph = _load_hypergraph(args.input)
    for line in derive_params(hypergraph).explain():
        print(line)
    return EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    """Write the scaling benchmark CSV."""
    from src.bench import run_bench

    defaults = get_config().bench
    doublings = defaults.doublings if args.doublings is None else args.doublings
    seed = defaults.seed if args.seed is None else args.seed
    repeats = defaults.repeats if args.repeats is None else args.repeats

    density = parse_fraction(args.density)
    if density is None or not 0 < density <= 1:
        return _fail(f"invalid density {args.density!r}")
    if args.n_start < args.k or doublings < 0 or repeats < 1:
        return _fail("need n-start >= k, doublings >= 0 and repeats >= 1")

    run_bench(
        sys.stdout,
        k=args.k,
        n_start=args.n_start,
        doublings=doublings,
        density=density,
        seed=seed,
        repeats=repeats,
    )
    return EXIT_OK


def build_parser() -> CliParser:
    """Build the argument parser."""
    parser = CliParser(
        prog="kpartite",
        description="Find complete balanced k-partite subgraphs in k-uniform hypergraphs.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="count", default=0)
    parser.add_argument("--config", help="configuration file to load")
    commands = parser.add_subparsers(dest="command", required=True)

    gen = commands.add_parser("gen", help="generate a hypergraph file")
    gen.add_argument("--kind", choices=sorted(KIND_FLAGS), required=True)
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--k", type=int, required=True)
    gen.add_argument("--p", help="edge probability, decimal or fraction")
    gen.add_argument("--m", type=int)
    gen.add_argument("--part-size", type=int)
    gen.add_argument("--noise", type=int, default=0)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out")
    gen.set_defaults(handler=cmd_gen)

    find = commands.add_parser("find", help="search for a partite witness")
    find.add_argument("--in", dest="input", required=True)
    find.add_argument("--forced-t", type=int)
    find.add_argument("--no-trim", action="store_true")
    find.add_argument("--explain", action="store_true")
    find.add_argument("--trace")
    find.add_argument("--out")
    find.set_defaults(handler=cmd_find)

    verify = commands.add_parser("verify", help="check a witness file")
    verify.add_argument("--in", dest="input", required=True)
    verify.add_argument("--witness", required=True)
    verify.set_defaults(handler=cmd_verify)

    oracle = commands.add_parser("oracle", help="brute-force maximum part size")
    oracle.add_argument("--in", dest="input", required=True)
    oracle.set_defaults(handler=cmd_oracle)

    params = commands.add_parser("params", help="print the search parameters")
    params.add_argument("--in", dest="input", required=True)
    params.set_defaults(handler=cmd_params)

    bench = commands.add_parser("bench", help="runtime-scaling benchmark")
    bench.add_argument("--k", type=int, required=True)
    bench.add_argument("--n-start", type=int, required=True)
    bench.add_argument("--doublings", type=int, help="default: config bench.doublings")
    bench.add_argument("--density", default="1")
    bench.add_argument("--seed", type=int, help="default: config bench.seed")
    bench.add_argument("--repeats", type=int, help="default: config bench.repeats")
    bench.set_defaults(handler=cmd_bench)

    return parser


def run(argv: list[str] | None = None) -> int:
    """
    Parse arguments and dispatch to a subcommand.

    Args:
        argv: Arguments without the program name (default: sys.argv[1:])

    Returns:
        Exit code
    """
    args = build_parser().parse_args(argv)

    try:
        if args.config:
            reload_config(Path(args.config))
        is_valid, message = get_config().validate()
        if not is_valid:
            return _fail(f"invalid configuration: {message}")
        if args.config or args.verbose:
            logger.configure(_log_level(args.verbose))
        logger.debug(f"Configuration: {json.dumps(get_config().to_dict())}")

        return args.handler(args)

    except WitnessNotFound as e:
        return _fail(f"WitnessNotFound: {e}", EXIT_NEGATIVE)

    except NoEdges as e:
        return _fail(f"NoEdges: {e}")

    except InstanceTooLarge as e:
        return _fail(f"InstanceTooLarge: {e}")

    except FormatError as e:
        return _fail(f"parse error: {e}")

    except InvalidArguments as e:
        return _fail(f"{type(e).__name__}: {e}")

    except InternalInvariantViolation:
        logger.exception("Internal invariant violated")
        return _fail("internal invariant violated; please report this input")

    except PartiteError as e:
        return _fail(str(e))

    except OSError as e:
        return _fail(str(e))

    except ValueError as e:
        # Malformed configuration values
        return _fail(str(e))


def main(argv: list[str] | None = None) -> None:
    """Main entry point."""
    try:
        sys.exit(run(argv))

    except KeyboardInterrupt:
        logger.info("Interrupted by user")
        sys.exit(130)


if __name__ == "__main__":
    main()
