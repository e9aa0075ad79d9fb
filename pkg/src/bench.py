"""
Runtime-scaling benchmark.

For n = n_start * 2**i, i = 0..doublings, this script generates an instance,
times find_partite over several repeats and writes CSV rows
"n,m,t,wall_ns,witness_min_part" followed by a "slope,<value>" row with the
least-squares slope of log(wall_ns) against log(n).
"""

from __future__ import annotations

import statistics
import sys
from dataclasses import dataclass
from fractions import Fraction
from time import perf_counter_ns
from typing import TYPE_CHECKING

import numpy as np

from src.core import logger
from src.core.finder import find_partite
from src.core.generators import GenKind, GenSpec, generate
from src.core.parameters import derive_params


if TYPE_CHECKING:
    from collections.abc import Iterator, Sequence
    from typing import TextIO


CSV_HEADER = "n,m,t,wall_ns,witness_min_part"


@dataclass(frozen=True)
class BenchRow:
    """One measured instance size."""

    n: int
    m: int
    t: int
    wall_ns: int
    witness_min_part: int

    def to_csv(self) -> str:
        return f"{self.n},{self.m},{self.t},{self.wall_ns},{self.witness_min_part}"


def bench_spec(n: int, k: int, density: Fraction, seed: int) -> GenSpec:
    """Complete instance at density 1, binomial otherwise."""
    if density == 1:
        return GenSpec(kind=GenKind.COMPLETE, n=n, k=k, seed=seed)
    return GenSpec(kind=GenKind.BINOMIAL, n=n, k=k, p=density, seed=seed)


def bench_rows(
    k: int,
    n_start: int,
    doublings: int,
    density: Fraction,
    seed: int,
    repeats: int,
) -> Iterator[BenchRow]:
    """
    Measure find_partite on doubling instance sizes.

    Args:
        k: Uniformity
        n_start: Smallest vertex count
        doublings: Number of doublings after n_start
        density: Edge probability (1 means complete)
        seed: Generator seed
        repeats: Timed runs per size; wall_ns is their median

    Yields:
        One BenchRow per size
    """
    for i in range(doublings + 1):
        n = n_start * 2**i
        hypergraph = generate(bench_spec(n, k, density, seed))

        timings: list[int] = []
        witness_min_part = 0
        for _ in range(repeats):
            started = perf_counter_ns()
            witness, _trace = find_partite(hypergraph)
            timings.append(perf_counter_ns() - started)
            witness_min_part = witness.min_part_size

        row = BenchRow(
            n=n,
            m=hypergraph.m,
            t=derive_params(hypergraph).t,
            wall_ns=int(statistics.median(timings)),
            witness_min_part=witness_min_part,
        )
        logger.info(f"bench n={n}: wall_ns={row.wall_ns}")
        yield row


def fit_loglog_slope(ns: Sequence[int], walls: Sequence[int]) -> float:
    """
    Least-squares slope of log(wall) against log(n).

    Returns:
        The slope, or nan with fewer than two points
    """
    if len(ns) < 2:
        return float("nan")
    x = np.log(np.asarray(ns, dtype=np.float64))
    y = np.log(np.maximum(np.asarray(walls, dtype=np.float64), 1.0))
    slope, _intercept = np.polyfit(x, y, 1)
    return float(slope)


def run_bench(
    stream: TextIO,
    k: int,
    n_start: int,
    doublings: int,
    density: Fraction,
    seed: int,
    repeats: int,
) -> float:
    """
    Write the benchmark CSV to a stream.

    Returns:
        The fitted slope
    """
    stream.write(CSV_HEADER + "\n")
    rows: list[BenchRow] = []
    for row in bench_rows(k, n_start, doublings, density, seed, repeats):
        rows.append(row)
        stream.write(row.to_csv() + "\n")
        stream.flush()

    slope = fit_loglog_slope([row.n for row in rows], [row.wall_ns for row in rows])
    stream.write(f"slope,{slope:.6f}\n")
    logger.info(f"bench slope: {slope:.6f}")
    return slope


def main() -> None:
    """Main function."""
    from src.main import main as cli_main

    cli_main(["bench", *sys.argv[1:]])


if __name__ == "__main__":
    main()
