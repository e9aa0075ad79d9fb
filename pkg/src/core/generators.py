"""
Seeded instance generators.

Every generator is a pure function of its GenSpec. Binomial instances use
a counter-based stream: the 64-bit word deciding rank r comes from the
Philox block at counter r // 4 under key seed, so membership of one rank
does not depend on how the universe is chunked.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import StrEnum
from fractions import Fraction

import numpy as np

from src.core import logger
from src.core.combinatorics import binomial, colex_rank_array
from src.core.config import get_config
from src.core.errors import InvalidArguments
from src.core.hypergraph import Hypergraph
from src.core.validators import validate_probability, validate_seed, validate_uniformity


WORDS_PER_BLOCK = 4  # Philox4x64 emits four 64-bit words per counter value


class GenKind(StrEnum):
    """Instance families."""

    COMPLETE = "complete"
    EMPTY = "empty"
    BINOMIAL = "binomial"
    EXACT_M = "exact_m"
    PLANTED = "planted"


@dataclass(frozen=True)
class GenSpec:
    """Description of one generated instance."""

    kind: GenKind
    n: int
    k: int
    p: Fraction | None = None
    m: int | None = None
    part_size: int | None = None
    noise_removals: int = 0
    seed: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", GenKind(self.kind))
        if self.p is not None:
            object.__setattr__(self, "p", Fraction(self.p))

    def validate(self) -> tuple[bool, str]:
        """
        Check that the parameters present match the kind.

        Returns:
            Tuple of (is_valid, error_message)
        """
        is_valid, message = validate_uniformity(self.k, self.n)
        if not is_valid:
            return False, message
        if self.n < self.k:
            return False, f"need n >= k, got n={self.n}, k={self.k}"
        if not validate_seed(self.seed):
            return False, f"seed {self.seed} is not a 64-bit unsigned integer"

        kind = self.kind
        no_p = (GenKind.COMPLETE, GenKind.EMPTY, GenKind.EXACT_M)
        if kind in no_p and self.p is not None:
            return False, f"--p does not apply to {kind}"
        if kind is not GenKind.EXACT_M and self.m is not None:
            return False, f"--m does not apply to {kind}"
        planted_only = self.part_size is not None or self.noise_removals
        if kind is not GenKind.PLANTED and planted_only:
            return False, f"--part-size/--noise do not apply to {kind}"

        if kind is GenKind.BINOMIAL and self.p is None:
            return False, "binomial instances need p"
        if self.p is not None and not validate_probability(self.p):
            return False, f"p={self.p} outside [0, 1]"
        if kind is GenKind.EXACT_M:
            if self.m is None:
                return False, "exact_m instances need m"
            if not 0 <= self.m <= binomial(self.n, self.k):
                return False, f"m={self.m} outside [0, binom({self.n},{self.k})]"
        if kind is GenKind.PLANTED:
            if self.part_size is None or self.part_size < 1:
                return False, "planted instances need part_size >= 1"
            if self.k * self.part_size > self.n:
                return False, f"k * part_size = {self.k * self.part_size} > n={self.n}"
            if self.noise_removals < 0:
                return False, "noise_removals must be non-negative"
        return True, ""


def complete(n: int, k: int) -> Hypergraph:
    """Complete k-uniform hypergraph on n vertices."""
    return Hypergraph.complete(n, k)


def empty(n: int, k: int) -> Hypergraph:
    """Edgeless k-uniform hypergraph on n vertices."""
    return Hypergraph.empty(n, k)


def _binomial_ranks(universe: int, p: Fraction, seed: int) -> np.ndarray:
    """Ranks r < universe whose Philox word falls below p * 2**64."""
    if p == 0:
        return np.empty(0, dtype=np.int64)
    if p == 1:
        return np.arange(universe, dtype=np.int64)

    threshold = np.uint64((p.numerator << 64) // p.denominator)
    chunk = get_config().search.rank_chunk
    chunk -= chunk % WORDS_PER_BLOCK
    kept: list[np.ndarray] = []

    for start in range(0, universe, chunk):
        stop = min(start + chunk, universe)
        bit_generator = np.random.Philox(counter=start // WORDS_PER_BLOCK, key=seed)
        words = bit_generator.random_raw(stop - start)
        kept.append(np.flatnonzero(words < threshold).astype(np.int64) + start)

    return np.concatenate(kept) if kept else np.empty(0, dtype=np.int64)


def _sample_ranks(universe: int, count: int, rng: np.random.Generator) -> np.ndarray:
    """Uniform count-subset of range(universe) by a sparse partial Fisher-Yates shuffle."""
    if count == 0:
        return np.empty(0, dtype=np.int64)
    offsets = rng.integers(0, universe - np.arange(count, dtype=np.int64))
    swapped: dict[int, int] = {}
    picked = np.empty(count, dtype=np.int64)
    for i, offset in enumerate(offsets.tolist()):
        j = i + offset
        picked[i] = swapped.get(j, j)
        swapped[j] = swapped.get(i, i)
    return picked


def _planted_ranks(n: int, k: int, part_size: int) -> np.ndarray:
    """Ranks of every transversal of parts [j*part_size, (j+1)*part_size)."""
    axes = [
        np.arange(j * part_size, (j + 1) * part_size, dtype=np.int64)
        for j in range(k)
    ]
    grid = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, k)
    return np.unique(colex_rank_array(grid))


def planted_parts(spec: GenSpec) -> list[tuple[int, ...]]:
    """The parts embedded by a planted spec."""
    size = spec.part_size or 0
    return [tuple(range(j * size, (j + 1) * size)) for j in range(spec.k)]


def generate(spec: GenSpec) -> Hypergraph:
    """
    Build the hypergraph described by spec.

    Planted instances start from an empty background (or a binomial one
    when p is given), add every transversal of the planted parts, then drop
    noise_removals edges chosen uniformly among the non-planted ones.

    Args:
        spec: Instance description

    Returns:
        Hypergraph, identical for identical specs

    Raises:
        InvalidArguments: If the parameters do not match the kind
    """
    is_valid, message = spec.validate()
    if not is_valid:
        raise InvalidArguments(message)

    n, k = spec.n, spec.k
    universe = binomial(n, k)
    logger.info(f"Generating {spec.kind} instance n={n}, k={k}, seed={spec.seed}")

    if spec.kind is GenKind.COMPLETE:
        return Hypergraph.complete(n, k)
    if spec.kind is GenKind.EMPTY:
        return Hypergraph.empty(n, k)
    if spec.kind is GenKind.BINOMIAL:
        assert spec.p is not None
        return Hypergraph.from_ranks(n, k, _binomial_ranks(universe, spec.p, spec.seed))

    rng = np.random.Generator(np.random.PCG64(spec.seed))
    if spec.kind is GenKind.EXACT_M:
        assert spec.m is not None
        return Hypergraph.from_ranks(n, k, _sample_ranks(universe, spec.m, rng))

    assert spec.part_size is not None
    p = spec.p if spec.p is not None else Fraction(0)
    background = _binomial_ranks(universe, p, spec.seed)
    planted = _planted_ranks(n, k, spec.part_size)
    ranks = np.union1d(background, planted)
    others = np.setdiff1d(ranks, planted, assume_unique=True)
    if spec.noise_removals > others.size:
        raise InvalidArguments(
            f"cannot remove {spec.noise_removals} of {others.size} non-planted edges"
        )
    removed = others[_sample_ranks(int(others.size), spec.noise_removals, rng)]
    return Hypergraph.from_ranks(n, k, np.setdiff1d(ranks, removed, assume_unique=True))
