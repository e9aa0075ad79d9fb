"""
Immutable k-uniform hypergraphs.

Edges are stored by colex rank in one of two interchangeable backends:
- RankBitset: one bit per rank in [0, binom(n, k)), O(k) membership
- SortedIndex: sorted rank array plus a hash set, for sparse huge universes

The backend is picked from the storage configuration unless the caller
names one.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property
from typing import TYPE_CHECKING, Protocol

import numpy as np

from src.core import logger
from src.core.combinatorics import (
    binomial,
    colex_rank,
    colex_rank_array,
    colex_unrank_array,
)
from src.core.config import BACKENDS, get_config
from src.core.errors import (
    InstanceTooLarge,
    InvalidArguments,
    NotASet,
    VertexOutOfRange,
)
from src.core.validators import validate_uniformity, validate_vertex


if TYPE_CHECKING:
    from collections.abc import Iterable, Iterator, Sequence


# Ranks live in int64.
RANK_LIMIT = 2**62


class EdgeStore(Protocol):
    """Membership structure over colex ranks."""

    name: str
    universe: int
    count: int

    def contains_rank(self, rank: int) -> bool: ...

    def contains_ranks(self, ranks: np.ndarray) -> np.ndarray: ...

    def iter_rank_chunks(self, chunk: int) -> Iterator[np.ndarray]: ...


class RankBitset:
    """One bit per colex rank, little-endian within each byte."""

    name = "bitset"

    def __init__(self, universe: int, bits: np.ndarray, count: int) -> None:
        self.universe = universe
        self.count = count
        self._bits = bits
        self._bits.flags.writeable = False

    @classmethod
    def from_ranks(cls, universe: int, ranks: np.ndarray) -> RankBitset:
        """
        Build from sorted, unique ranks.

        Args:
            universe: Number of rank slots
            ranks: Sorted unique int64 ranks below universe

        Returns:
            Bitset with exactly those bits set
        """
        bits = np.zeros((universe + 7) // 8, dtype=np.uint8)
        if ranks.size:
            np.bitwise_or.at(
                bits, ranks >> 3, np.left_shift(1, ranks & 7).astype(np.uint8)
            )
        return cls(universe, bits, int(ranks.size))

    @classmethod
    def full(cls, universe: int) -> RankBitset:
        """Bitset with every slot set."""
        bits = np.full((universe + 7) // 8, 0xFF, dtype=np.uint8)
        tail = universe % 8
        if tail:
            bits[-1] = (1 << tail) - 1
        return cls(universe, bits, universe)

    def contains_rank(self, rank: int) -> bool:
        return bool((int(self._bits[rank >> 3]) >> (rank & 7)) & 1)

    def contains_ranks(self, ranks: np.ndarray) -> np.ndarray:
        ranks = np.asarray(ranks, dtype=np.int64)
        shifts = (ranks & 7).astype(np.uint8)
        return ((self._bits[ranks >> 3] >> shifts) & 1).astype(bool)

    def iter_rank_chunks(self, chunk: int) -> Iterator[np.ndarray]:
        step = max(chunk // 8, 1)
        for start in range(0, self._bits.size, step):
            block = np.unpackbits(self._bits[start : start + step], bitorder="little")
            found = np.flatnonzero(block).astype(np.int64) + start * 8
            if found.size:
                yield found


class SortedIndex:
    """Sorted rank array with hash-set scalar lookup."""

    name = "sorted"

    def __init__(self, universe: int, ranks: np.ndarray) -> None:
        self.universe = universe
        self.count = int(ranks.size)
        self._ranks = ranks
        self._ranks.flags.writeable = False

    @cached_property
    def _members(self) -> frozenset[int]:
        return frozenset(self._ranks.tolist())

    def contains_rank(self, rank: int) -> bool:
        return rank in self._members

    def contains_ranks(self, ranks: np.ndarray) -> np.ndarray:
        ranks = np.asarray(ranks, dtype=np.int64)
        if self._ranks.size == 0:
            return np.zeros(ranks.shape, dtype=bool)
        pos = np.searchsorted(self._ranks, ranks)
        clipped = np.minimum(pos, self._ranks.size - 1)
        return (pos < self._ranks.size) & (self._ranks[clipped] == ranks)

    def iter_rank_chunks(self, chunk: int) -> Iterator[np.ndarray]:
        for start in range(0, self._ranks.size, chunk):
            yield self._ranks[start : start + chunk]


def select_backend(universe: int, backend: str | None = None) -> str:
    """
    Pick the storage backend for a rank universe.

    Args:
        universe: binom(n, k)
        backend: Explicit choice (auto, bitset, sorted); default from config

    Returns:
        "bitset" or "sorted"

    Raises:
        InvalidArguments: If the backend name is unknown
    """
    storage = get_config().storage
    choice = backend or storage.backend
    if choice not in BACKENDS:
        raise InvalidArguments(f"unknown storage backend: {choice}")
    if choice == "auto":
        return "bitset" if universe <= storage.mem_budget_bits else "sorted"
    return choice


def _make_store(universe: int, ranks: np.ndarray, backend: str | None) -> EdgeStore:
    if select_backend(universe, backend) == "bitset":
        return RankBitset.from_ranks(universe, ranks)
    return SortedIndex(universe, ranks)


class Hypergraph:
    """Immutable k-uniform hypergraph on vertices 0..n-1."""

    def __init__(self, n: int, k: int, store: EdgeStore) -> None:
        """
        Initialize Hypergraph.

        Prefer the build/from_ranks/complete/empty constructors.

        Args:
            n: Vertex count
            k: Uniformity
            store: Edge membership structure over binom(n, k) ranks
        """
        self.n = n
        self.k = k
        self.store = store

    @staticmethod
    def check_shape(n: int, k: int) -> int:
        """
        Check that (n, k) is a valid shape whose ranks fit in int64.

        Returns:
            binom(n, k)

        Raises:
            InvalidArguments: If k < 1 or n < 0
            InstanceTooLarge: If the rank range leaves int64
        """
        is_valid, message = validate_uniformity(k, n)
        if not is_valid:
            raise InvalidArguments(message)
        universe = binomial(n, k)
        if universe * k >= RANK_LIMIT:
            raise InstanceTooLarge(
                f"binom({n}, {k}) = {universe} exceeds the int64 rank range"
            )
        return universe

    @classmethod
    def build(
        cls,
        n: int,
        k: int,
        edge_list: Iterable[Sequence[int]],
        backend: str | None = None,
    ) -> Hypergraph:
        """
        Build a hypergraph from edge tuples.

        Tuples are sorted internally and duplicates collapse.

        Args:
            n: Vertex count
            k: Uniformity
            edge_list: Tuples of k distinct ids below n
            backend: Storage backend override

        Returns:
            Canonical Hypergraph

        Raises:
            VertexOutOfRange: If an id is negative or >= n
            NotASet: If a tuple repeats an id
            InvalidArguments: If a tuple does not have k ids
        """
        universe = cls.check_shape(n, k)

        rows: list[list[int]] = []
        for edge in edge_list:
            if len(edge) != k:
                raise InvalidArguments(f"edge {tuple(edge)} does not have {k} ids")
            for v in edge:
                if not validate_vertex(v, n):
                    raise VertexOutOfRange(f"vertex {v} of edge {tuple(edge)} >= {n}")
            row = sorted(edge)
            if any(a == b for a, b in zip(row, row[1:], strict=False)):
                raise NotASet(f"edge {tuple(edge)} repeats a vertex")
            rows.append(row)

        matrix = np.array(rows, dtype=np.int64).reshape(len(rows), k)
        ranks = np.unique(colex_rank_array(matrix))
        return cls(n, k, _make_store(universe, ranks, backend))

    @classmethod
    def from_ranks(
        cls, n: int, k: int, ranks: np.ndarray, backend: str | None = None
    ) -> Hypergraph:
        """
        Build a hypergraph from colex ranks of its edges.

        Args:
            n: Vertex count
            k: Uniformity
            ranks: Ranks in [0, binom(n, k)); sorted and deduplicated here
            backend: Storage backend override

        Returns:
            Hypergraph with those edges

        Raises:
            InvalidArguments: If a rank is out of range
        """
        universe = cls.check_shape(n, k)
        ranks = np.unique(np.asarray(ranks, dtype=np.int64))
        if ranks.size and (ranks[0] < 0 or ranks[-1] >= universe):
            raise InvalidArguments(f"rank outside [0, {universe})")
        return cls(n, k, _make_store(universe, ranks, backend))

    @classmethod
    def complete(cls, n: int, k: int, backend: str | None = None) -> Hypergraph:
        """Hypergraph containing every k-subset of range(n)."""
        universe = cls.check_shape(n, k)
        if select_backend(universe, backend) == "bitset":
            return cls(n, k, RankBitset.full(universe))
        return cls(n, k, SortedIndex(universe, np.arange(universe, dtype=np.int64)))

    @classmethod
    def empty(cls, n: int, k: int, backend: str | None = None) -> Hypergraph:
        """Hypergraph with no edges."""
        return cls.from_ranks(n, k, np.empty(0, dtype=np.int64), backend)

    @property
    def m(self) -> int:
        """Edge count."""
        return self.store.count

    @property
    def universe(self) -> int:
        """Number of possible edges, binom(n, k)."""
        return self.store.universe

    @property
    def backend(self) -> str:
        """Storage backend name."""
        return self.store.name

    def _canonical(self, edge: Sequence[int]) -> list[int]:
        if len(edge) != self.k:
            raise InvalidArguments(f"edge {tuple(edge)} does not have {self.k} ids")
        for v in edge:
            if not validate_vertex(v, self.n):
                raise VertexOutOfRange(f"vertex {v} >= {self.n}")
        row = sorted(edge)
        if any(a == b for a, b in zip(row, row[1:], strict=False)):
            raise NotASet(f"edge {tuple(edge)} repeats a vertex")
        return row

    def contains_edge(self, edge: Sequence[int]) -> bool:
        """
        Check whether a k-set is an edge.

        Args:
            edge: k distinct ids below n, in any order

        Returns:
            True if the canonical form of edge is stored
        """
        return self.store.contains_rank(colex_rank(self._canonical(edge)))

    def contains_ranks(self, ranks: np.ndarray) -> np.ndarray:
        """Vectorized membership on colex ranks."""
        return self.store.contains_ranks(ranks)

    def iter_rank_chunks(self) -> Iterator[np.ndarray]:
        """Yield the edge ranks in increasing order, in blocks."""
        yield from self.store.iter_rank_chunks(get_config().search.rank_chunk)

    def ranks(self) -> np.ndarray:
        """All edge ranks, sorted."""
        chunks = list(self.iter_rank_chunks())
        if not chunks:
            return np.empty(0, dtype=np.int64)
        return np.concatenate(chunks)

    def iter_edge_rows(self) -> Iterator[np.ndarray]:
        """Yield (c, k) blocks of edges in colex order."""
        for chunk in self.iter_rank_chunks():
            yield colex_unrank_array(chunk, self.k, self.n)

    def edges(self) -> Iterator[tuple[int, ...]]:
        """Iterate over edges as increasing tuples, in colex order."""
        for rows in self.iter_edge_rows():
            yield from (tuple(row) for row in rows.tolist())

    @cached_property
    def degrees(self) -> np.ndarray:
        """Degree of every vertex as a read-only int64 array."""
        counts = np.zeros(self.n, dtype=np.int64)
        for rows in self.iter_edge_rows():
            counts += np.bincount(rows.ravel(), minlength=self.n)
        counts.flags.writeable = False
        return counts

    def degree(self, v: int) -> int:
        """
        Get the number of edges containing a vertex.

        Raises:
            VertexOutOfRange: If v is not a vertex
        """
        if not validate_vertex(v, self.n):
            raise VertexOutOfRange(f"vertex {v} >= {self.n}")
        return int(self.degrees[v])

    def top_degree_vertices(self, w: int) -> list[int]:
        """
        Pick the w vertices of highest degree.

        Ties are broken by ascending id.

        Args:
            w: Number of vertices to pick

        Returns:
            The chosen ids, sorted ascending

        Raises:
            InvalidArguments: If w is negative or larger than n
        """
        if w < 0 or w > self.n:
            raise InvalidArguments(f"cannot pick {w} of {self.n} vertices")
        order = np.lexsort((np.arange(self.n), -self.degrees))
        return sorted(order[:w].tolist())

    def density(self) -> Fraction:
        """
        Get the exact edge density m / binom(n, k).

        Raises:
            InvalidArguments: If n < k
        """
        if self.n < self.k:
            raise InvalidArguments(f"density undefined for n={self.n} < k={self.k}")
        return Fraction(self.m, self.universe)

    def _link_rows(self, start: int, stop: int) -> np.ndarray:
        ranks = np.arange(start, stop, dtype=np.int64)
        return colex_unrank_array(ranks, self.k - 1, self.n)

    def _extend_and_test(self, rows: np.ndarray, x: int) -> np.ndarray:
        """Membership of y + {x} for rows y not containing x."""
        column = np.full((rows.shape[0], 1), x, dtype=np.int64)
        joined = np.sort(np.hstack((rows, column)), axis=1)
        return self.store.contains_ranks(colex_rank_array(joined))

    def _require_link_args(self, vertices: Sequence[int]) -> None:
        if self.k < 2:
            raise InvalidArguments("link sets need uniformity at least 2")
        if not vertices:
            raise InvalidArguments("link set of an empty vertex set")
        for x in vertices:
            if not validate_vertex(x, self.n):
                raise VertexOutOfRange(f"vertex {x} >= {self.n}")

    def neighbourhood_mask(self, x: int) -> np.ndarray:
        """
        Mark the (k-1)-sets y with y + {x} an edge.

        Args:
            x: Vertex

        Returns:
            Boolean array indexed by colex rank of y over binom(n, k-1) slots
        """
        self._require_link_args([x])
        total = binomial(self.n, self.k - 1)
        mask = np.zeros(total, dtype=bool)
        chunk = get_config().search.rank_chunk
        for start in range(0, total, chunk):
            stop = min(start + chunk, total)
            rows = self._link_rows(start, stop)
            free = ~(rows == x).any(axis=1)
            idx = np.flatnonzero(free)
            if idx.size:
                mask[start + idx] = self._extend_and_test(rows[idx], x)
        return mask

    def link_set(self, vertices: Sequence[int]) -> np.ndarray:
        """
        Compute the link set S of a vertex set T.

        S holds the (k-1)-sets y such that y + {x} is an edge for every x in
        T; each such y avoids T. A boolean array over binom(n, k-1) slots
        starts all true and is falsified x by x.

        Args:
            vertices: Nonempty vertex set T

        Returns:
            Sorted int64 colex ranks (over (k-1)-subsets) of the members of S

        Raises:
            InvalidArguments: If T is empty or k < 2
        """
        self._require_link_args(vertices)
        total = binomial(self.n, self.k - 1)
        alive = np.ones(total, dtype=bool)
        chunk = get_config().search.rank_chunk

        for start in range(0, total, chunk):
            stop = min(start + chunk, total)
            rows = self._link_rows(start, stop)
            block = alive[start:stop]
            for x in vertices:
                idx = np.flatnonzero(block)
                if not idx.size:
                    break
                candidates = rows[idx]
                keep = ~(candidates == x).any(axis=1)
                keep[keep] = self._extend_and_test(candidates[keep], x)
                block[idx] = keep

        found = np.flatnonzero(alive).astype(np.int64)
        logger.debug(f"link_set(T={list(vertices)}) on k={self.k}: |S|={found.size}")
        return found

    def smallest_edge(self) -> tuple[int, ...] | None:
        """
        Get the lexicographically smallest edge.

        Returns:
            The edge as an increasing tuple, or None if there are no edges
        """
        best: tuple[int, ...] | None = None
        for rows in self.iter_edge_rows():
            keys = tuple(rows[:, i] for i in range(self.k - 1, -1, -1))
            candidate = tuple(rows[np.lexsort(keys)[0]].tolist())
            if best is None or candidate < best:
                best = candidate
        return best

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return (
            self.n == other.n
            and self.k == other.k
            and self.m == other.m
            and np.array_equal(self.ranks(), other.ranks())
        )

    def __hash__(self) -> int:
        return hash((self.n, self.k, self.m))

    def __repr__(self) -> str:
        return f"Hypergraph(n={self.n}, k={self.k}, m={self.m}, backend={self.backend})"
