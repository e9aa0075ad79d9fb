"""
Witness verification and brute-force oracles.

verify_witness checks a claimed partite witness unconditionally. The
remaining functions give ground truth on small instances: the bipartite
incidence between (k-1)-sets and a vertex set W, the Kovari-Sos-Turan
edge threshold that forces a complete B[S, T], an exhaustive biclique
search, and the largest balanced complete k-partite subgraph.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING

import numpy as np

from src.core.combinatorics import binomial, colex_rank_array, subsets
from src.core.config import get_config
from src.core.errors import InstanceTooLarge, InvalidArguments, VertexOutOfRange
from src.core.hypergraph import Hypergraph
from src.core.validators import validate_vertex


if TYPE_CHECKING:
    from collections.abc import Sequence


@dataclass(frozen=True)
class Violation:
    """First reason a witness fails."""

    kind: str  # empty, overlap, missing
    detail: tuple[int, ...]

    def describe(self) -> str:
        """Human-readable one-line report."""
        if self.kind == "empty":
            return f"empty part {self.detail[0]}"
        if self.kind == "overlap":
            vertex, first, second = self.detail
            return f"vertex {vertex} shared by parts {first} and {second}"
        return "missing edge " + " ".join(str(v) for v in self.detail)


def find_violation(
    hypergraph: Hypergraph, parts: Sequence[Sequence[int]]
) -> Violation | None:
    """
    Find the first reason a witness is not a complete k-partite subgraph.

    Checks, in order: nonempty parts, pairwise disjointness, then every
    transversal in lexicographic order of the part product.

    Args:
        hypergraph: Host hypergraph
        parts: k vertex sets

    Returns:
        The first violation, or None if the witness is valid

    Raises:
        InvalidArguments: If the number of parts is not k
        VertexOutOfRange: If a part holds a non-vertex
    """
    k = hypergraph.k
    if len(parts) != k:
        raise InvalidArguments(f"expected {k} parts, got {len(parts)}")

    owner: dict[int, int] = {}
    for index, part in enumerate(parts, start=1):
        if not part:
            return Violation("empty", (index,))
        for v in part:
            if not validate_vertex(v, hypergraph.n):
                raise VertexOutOfRange(f"vertex {v} >= {hypergraph.n}")
            if v in owner and owner[v] != index:
                return Violation("overlap", (v, owner[v], index))
            owner[v] = index

    chunk = get_config().search.transversal_chunk
    product = itertools.product(*(sorted(set(part)) for part in parts))
    while True:
        block = list(itertools.islice(product, chunk))
        if not block:
            return None
        rows = np.sort(np.array(block, dtype=np.int64), axis=1)
        present = hypergraph.contains_ranks(colex_rank_array(rows))
        if not present.all():
            return Violation("missing", tuple(block[int(np.argmin(present))]))


def verify_witness(hypergraph: Hypergraph, parts: Sequence[Sequence[int]]) -> bool:
    """
    Check that parts span a complete k-partite subgraph.

    Args:
        hypergraph: Host hypergraph
        parts: k vertex sets

    Returns:
        True iff the parts are nonempty, pairwise disjoint and every
        transversal is an edge

    Raises:
        InvalidArguments: If the number of parts is not k
    """
    return find_violation(hypergraph, parts) is None


@dataclass(frozen=True)
class KstInstance:
    """Bipartite graph between a part U (rows) and a part W (columns)."""

    adjacency: np.ndarray  # bool, shape (u, w)
    columns: tuple[int, ...] = ()  # vertex ids of W when built from a hypergraph

    @property
    def u(self) -> int:
        return int(self.adjacency.shape[0])

    @property
    def w(self) -> int:
        return int(self.adjacency.shape[1])

    @property
    def z(self) -> int:
        """Edge count."""
        return int(np.count_nonzero(self.adjacency))

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[int]] | np.ndarray) -> KstInstance:
        """Instance from a 0/1 matrix with rows in U and columns in W."""
        adjacency = np.asarray(matrix, dtype=bool)
        if adjacency.ndim != 2:
            raise InvalidArguments("adjacency must be a 2-D matrix")
        return cls(adjacency=adjacency)


def kst_threshold(u: int, w: int, s: int, t: int) -> float:
    """
    Edge count above which B[S, T] must be complete for some |S|=s, |T|=t.

    (s - 1) ** (1/t) * (w - t + 1) * u ** (1 - 1/t) + (t - 1) * u

    Raises:
        InvalidArguments: Unless u >= s >= 1 and w >= t >= 1
    """
    if not (u >= s >= 1 and w >= t >= 1):
        raise InvalidArguments(f"need u >= s >= 1 and w >= t >= 1, got {(u, w, s, t)}")
    return (s - 1) ** (1 / t) * (w - t + 1) * u ** (1 - 1 / t) + (t - 1) * u


def exists_biclique_bruteforce(
    instance: KstInstance, s: int, t: int
) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """
    Search for T in W and S in U with B[S, T] complete.

    T runs over the t-subsets of column indices in colex order; the first T
    whose common neighbourhood has s rows wins, with S its s lowest rows.

    Args:
        instance: Bipartite graph
        s: Required rows
        t: Required columns

    Returns:
        Tuple of (T column indices, S row indices), or None

    Raises:
        InvalidArguments: If s > u or t > w
    """
    if s > instance.u or t > instance.w or s < 0 or t < 0:
        raise InvalidArguments(f"need s <= {instance.u} and t <= {instance.w}")

    for chosen in subsets(range(instance.w), t):
        common = np.flatnonzero(instance.adjacency[:, list(chosen)].all(axis=1))
        if common.size >= s:
            return tuple(chosen), tuple(common[:s].tolist())
    return None


def build_kst_instance(hypergraph: Hypergraph, vertices: Sequence[int]) -> KstInstance:
    """
    Bipartite graph between the (k-1)-sets of V and a vertex list W.

    Row y (by colex rank) is adjacent to column x iff y + {x} is an edge.

    Args:
        hypergraph: Host hypergraph, k >= 2
        vertices: The vertex list W

    Returns:
        KstInstance whose edge count is the degree sum over W
    """
    if hypergraph.k < 2:
        raise InvalidArguments("the incidence graph needs uniformity at least 2")
    if not vertices:
        return KstInstance(np.zeros((binomial(hypergraph.n, hypergraph.k - 1), 0), bool))
    columns = [hypergraph.neighbourhood_mask(x) for x in vertices]
    return KstInstance(np.column_stack(columns), tuple(vertices))


def degree_sum_bound_holds(hypergraph: Hypergraph, vertices: Sequence[int]) -> bool:
    """Check sum of degrees over W >= k * m * |W| / n, exactly."""
    total = sum(hypergraph.degree(v) for v in vertices)
    return total >= Fraction(hypergraph.k * hypergraph.m * len(vertices), hypergraph.n)


def _contains_partite(hypergraph: Hypergraph, t: int) -> bool:
    """Exhaustive test for k disjoint t-sets spanning a complete k-partite graph."""
    if hypergraph.k == 1:
        return hypergraph.m >= t
    if hypergraph.m == 0 or hypergraph.n < hypergraph.k * t:
        return False

    for last in subsets(range(hypergraph.n), t):
        link = hypergraph.link_set(last)
        if link.size == 0:
            continue
        link_graph = Hypergraph.from_ranks(hypergraph.n, hypergraph.k - 1, link)
        if _contains_partite(link_graph, t):
            return True
    return False


def max_balanced_partite_bruteforce(hypergraph: Hypergraph) -> int:
    """
    Largest t such that H contains a complete k-partite graph with parts of size t.

    Any such subgraph has its last part T and the remaining parts inside the
    link hypergraph of T, so trying every T and recursing is exhaustive.

    Args:
        hypergraph: Hypergraph within the configured oracle cap

    Returns:
        The largest such t (0 when there are no edges)

    Raises:
        InstanceTooLarge: If n exceeds the cap for this uniformity
    """
    cap = get_config().oracle.cap_for(hypergraph.k)
    if hypergraph.n > cap:
        raise InstanceTooLarge(
            f"n={hypergraph.n} above the oracle cap {cap} for k={hypergraph.k}"
        )

    best = 0
    while _contains_partite(hypergraph, best + 1):
        best += 1
    return best
