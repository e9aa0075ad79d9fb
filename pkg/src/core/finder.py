"""
Recursive search for a complete k-partite subgraph.

Each level picks the w highest-degree vertices W, scans the t-subsets T of
W in colex order and takes the first T whose link set S has at least s
members. S becomes the edge set of a (k-1)-uniform hypergraph on the same
vertices, the search recurses on it, and T is appended to the parts it
returns. At uniformity 1 the parts are just the vertices that are edges.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import TYPE_CHECKING, Any

from src.core import logger
from src.core.combinatorics import subsets
from src.core.errors import (
    InternalInvariantViolation,
    InvalidArguments,
    NoEdges,
    WitnessNotFound,
)
from src.core.hypergraph import Hypergraph
from src.core.parameters import derive_params, forced_params


if TYPE_CHECKING:
    from src.core.parameters import ParamSet


@dataclass(frozen=True)
class PartiteWitness:
    """Ordered disjoint vertex sets spanning a complete k-partite subgraph."""

    parts: tuple[tuple[int, ...], ...]
    source_k: int

    @property
    def min_part_size(self) -> int:
        """Size of the smallest part (0 when there are no parts)."""
        return min((len(part) for part in self.parts), default=0)

    @property
    def sizes(self) -> list[int]:
        """Part sizes in order."""
        return [len(part) for part in self.parts]


@dataclass(frozen=True)
class LevelRecord:
    """One recursion level: its parameters, the chosen T and |S|."""

    k: int
    n: int
    m: int
    d: Fraction
    t: int
    w: int
    s: int
    chosen: tuple[int, ...]
    link_size: int
    scanned: int

    def to_dict(self) -> dict[str, Any]:
        """JSON-ready dictionary with d as "num/den"."""
        data = asdict(self)
        data["d"] = f"{self.d.numerator}/{self.d.denominator}"
        data["chosen"] = list(self.chosen)
        return data


@dataclass
class RecursionTrace:
    """Per-level records of one search, outermost level first."""

    levels: list[LevelRecord] = field(default_factory=list)
    fallback: bool = False
    forced_t: int | None = None

    @property
    def chain(self) -> list[int]:
        """Uniformities visited, ending at the base case."""
        return [level.k for level in self.levels] + (
            [self.levels[-1].k - 1] if self.levels else []
        )

    def to_json(self) -> str:
        """Serialize the trace as indented JSON."""
        return json.dumps(
            {
                "fallback": self.fallback,
                "forced_t": self.forced_t,
                "levels": [level.to_dict() for level in self.levels],
            },
            indent=2,
        )


def _base_case(hypergraph: Hypergraph) -> list[tuple[int, ...]]:
    """The vertices that are 1-uniform edges form the single part."""
    return [tuple(int(v) for v in hypergraph.ranks())]


def _threshold(params: ParamSet) -> int:
    # The k = 2 link set is the final part; it must also reach t.
    return max(params.s, params.t) if params.k == 2 else params.s


def _search(
    hypergraph: Hypergraph,
    trace: RecursionTrace,
    forced_t: int | None,
    parent_t: int | None,
) -> list[tuple[int, ...]]:
    if hypergraph.k == 1:
        if hypergraph.m == 0:
            raise NoEdges("the 1-uniform hypergraph has no edges")
        return _base_case(hypergraph)

    if forced_t is None:
        params = derive_params(hypergraph)
        if params.t < 2:
            raise InternalInvariantViolation(
                f"t={params.t} < 2 inside the recursion at k={params.k}"
            )
        if parent_t is not None and params.t < parent_t:
            raise InternalInvariantViolation(
                f"t'={params.t} < t={parent_t} at k={params.k}"
            )
    else:
        params = forced_params(hypergraph, forced_t)

    logger.info(
        f"Level k={params.k}: n={params.n}, m={params.m}, d={params.density_text}, "
        f"t={params.t}, w={params.w}, s={params.s}"
    )

    if params.w < params.t:
        raise WitnessNotFound(f"t={params.t} exceeds the n={params.n} vertices")

    threshold = _threshold(params)
    ground = hypergraph.top_degree_vertices(params.w)
    scanned = 0

    for chosen in subsets(ground, params.t):
        scanned += 1
        link = hypergraph.link_set(chosen)
        if link.size < threshold:
            continue

        link_graph = Hypergraph.from_ranks(hypergraph.n, hypergraph.k - 1, link)
        if link_graph.density() < (params.d / 4) ** params.t:
            raise InternalInvariantViolation(
                f"d'={link_graph.density()} < (d/4)^t at k={params.k}"
            )

        trace.levels.append(
            LevelRecord(
                k=params.k,
                n=params.n,
                m=params.m,
                d=params.d,
                t=params.t,
                w=params.w,
                s=params.s,
                chosen=tuple(chosen),
                link_size=int(link.size),
                scanned=scanned,
            )
        )
        logger.info(f"Level k={params.k}: T={list(chosen)}, |S|={link.size}")

        parts = _search(link_graph, trace, forced_t, params.t)
        return [*parts, tuple(chosen)]

    message = (
        f"no T among {scanned} candidates reached |S| >= {threshold} "
        f"at k={params.k}"
    )
    if forced_t is None:
        raise InternalInvariantViolation(message)
    raise WitnessNotFound(message)


def _fallback(hypergraph: Hypergraph) -> PartiteWitness:
    edge = hypergraph.smallest_edge()
    if edge is None:
        raise NoEdges("the hypergraph has no edges")
    return PartiteWitness(parts=tuple((v,) for v in edge), source_k=hypergraph.k)


def find_partite(hypergraph: Hypergraph) -> tuple[PartiteWitness, RecursionTrace]:
    """
    Find a complete balanced k-partite subgraph with parts of size >= t.

    When t(n, d, k) < 2 the k singletons of the lexicographically smallest
    edge are returned instead.

    Args:
        hypergraph: Hypergraph with at least one edge

    Returns:
        Tuple of (untrimmed witness, trace)

    Raises:
        NoEdges: If the hypergraph has no edges
        InternalInvariantViolation: If a guarantee of the search fails
    """
    if hypergraph.m == 0:
        raise NoEdges("the hypergraph has no edges")

    trace = RecursionTrace()
    if hypergraph.k == 1:
        return PartiteWitness(tuple(_base_case(hypergraph)), 1), trace

    params = derive_params(hypergraph)
    if params.t < 2:
        logger.info(f"t={params.t} < 2, returning a single edge")
        trace.fallback = True
        return _fallback(hypergraph), trace

    parts = _search(hypergraph, trace, None, None)
    return PartiteWitness(tuple(parts), hypergraph.k), trace


def find_partite_forced(
    hypergraph: Hypergraph, forced_t: int
) -> tuple[PartiteWitness, RecursionTrace]:
    """
    Run the search with t fixed to forced_t at every level.

    w and s are recomputed from forced_t and each level's density. There is
    no success guarantee.

    Args:
        hypergraph: Hypergraph with at least one edge
        forced_t: Part size target, at least 1

    Returns:
        Tuple of (untrimmed witness with parts of size >= forced_t, trace)

    Raises:
        NoEdges: If the hypergraph has no edges
        WitnessNotFound: If some level finds no T with |S| large enough
    """
    if forced_t < 1:
        raise InvalidArguments(f"forced t must be at least 1, got {forced_t}")
    if hypergraph.m == 0:
        raise NoEdges("the hypergraph has no edges")

    trace = RecursionTrace(forced_t=forced_t)
    parts = _search(hypergraph, trace, forced_t, None)
    return PartiteWitness(tuple(parts), hypergraph.k), trace


def trim_balanced(witness: PartiteWitness, t: int) -> PartiteWitness:
    """
    Truncate every part to its t lowest ids.

    Args:
        witness: Witness whose parts all have at least t vertices
        t: Target part size

    Returns:
        Balanced witness

    Raises:
        InvalidArguments: If some part has fewer than t vertices
    """
    if t < 0:
        raise InvalidArguments(f"negative part size {t}")
    for index, part in enumerate(witness.parts, start=1):
        if len(part) < t:
            raise InvalidArguments(f"part {index} has {len(part)} < {t} vertices")
    return PartiteWitness(
        parts=tuple(tuple(sorted(part)[:t]) for part in witness.parts),
        source_k=witness.source_k,
    )
