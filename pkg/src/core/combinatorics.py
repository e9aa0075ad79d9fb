"""
Exact binomials, colex ranking and t-subset enumeration.

Subsets are ranked in the combinadic (colexicographic) number system:
the k-subset c_0 < c_1 < ... < c_{k-1} has rank sum(binom(c_i, i + 1)),
a bijection onto [0, binom(n, k)) for subsets of range(n). Scalar
functions use Python integers and are exact for any size; the *_array
variants work on numpy int64 and back the hypergraph storage.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import TYPE_CHECKING

import numpy as np

from src.core.errors import InvalidArguments, InvalidSubset
from src.core.validators import validate_subset


if TYPE_CHECKING:
    from collections.abc import Iterator, Sequence


def binomial(n: int, k: int) -> int:
    """
    Compute binom(n, k) exactly.

    Args:
        n: Ground set size
        k: Subset size

    Returns:
        n! / (k! (n - k)!), or 0 when k > n

    Raises:
        InvalidArguments: If n or k is negative
    """
    if n < 0 or k < 0:
        raise InvalidArguments(f"binomial needs naturals, got ({n}, {k})")
    return math.comb(n, k)


def colex_rank(subset: Sequence[int], k: int | None = None) -> int:
    """
    Rank a subset in colex order.

    Args:
        subset: Strictly increasing vertex ids
        k: Expected size (default: len(subset))

    Returns:
        sum(binom(subset[i], i + 1))

    Raises:
        InvalidSubset: If the ids are not strictly increasing or the size is not k
    """
    if k is not None and len(subset) != k:
        raise InvalidSubset(f"expected {k} ids, got {len(subset)}: {list(subset)}")
    if not validate_subset(subset):
        raise InvalidSubset(f"not strictly increasing: {list(subset)}")

    return sum(math.comb(c, i + 1) for i, c in enumerate(subset))


def _largest_below(rank: int, i: int) -> int:
    """Largest c with binom(c, i) <= rank."""
    lo = i - 1  # binom(i - 1, i) = 0 <= rank
    hi = i
    while math.comb(hi, i) <= rank:
        lo = hi
        hi *= 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if math.comb(mid, i) <= rank:
            lo = mid
        else:
            hi = mid
    return lo


def colex_unrank(rank: int, k: int) -> list[int]:
    """
    Invert colex_rank.

    Args:
        rank: Non-negative rank
        k: Subset size

    Returns:
        The strictly increasing k-subset with the given rank

    Raises:
        InvalidArguments: If rank or k is negative
    """
    if rank < 0 or k < 0:
        raise InvalidArguments(f"colex_unrank needs naturals, got ({rank}, {k})")

    subset = [0] * k
    for i in range(k, 0, -1):
        c = _largest_below(rank, i)
        subset[i - 1] = c
        rank -= math.comb(c, i)
    return subset


INT64_MAX = int(np.iinfo(np.int64).max)


@lru_cache(maxsize=64)
def _comb_table(n: int, i: int) -> np.ndarray:
    """binom(c, i) for c in range(n), saturated at the int64 maximum."""
    table = np.zeros(n, dtype=np.int64)
    value = 1
    for c in range(i, n):
        if c > i:
            value = value * c // (c - i)
        if value > INT64_MAX:
            table[c:] = INT64_MAX
            break
        table[c] = value
    table.flags.writeable = False
    return table


def _table_size(top: int) -> int:
    # Power of two above the largest id, so nearby calls share a cached table.
    return 1 << max(top, 1).bit_length()


def comb_array(c: np.ndarray, j: int) -> np.ndarray:
    """
    Evaluate binom(c, j) elementwise on a non-negative int64 array.

    Values are looked up in a table built with Python integers, so no
    intermediate product can overflow. Entries above the int64 range
    saturate at its maximum.
    """
    c = np.asarray(c, dtype=np.int64)
    if c.size == 0:
        return np.zeros_like(c)
    return _comb_table(_table_size(int(c.max())), j)[c]


def colex_rank_array(rows: np.ndarray) -> np.ndarray:
    """
    Rank every row of an (m, k) array of row-wise increasing ids.

    Each term binom(rows[:, i], i + 1) of a valid row is at most its rank,
    so ranks below the int64 range are exact.

    Args:
        rows: int64 array, each row strictly increasing

    Returns:
        int64 array of m colex ranks
    """
    rows = np.asarray(rows, dtype=np.int64)
    ranks = np.zeros(rows.shape[0], dtype=np.int64)
    if rows.size == 0:
        return ranks
    size = _table_size(int(rows.max()))
    for i in range(rows.shape[1]):
        ranks += _comb_table(size, i + 1)[rows[:, i]]
    return ranks


def colex_unrank_array(ranks: np.ndarray, k: int, n: int) -> np.ndarray:
    """
    Unrank a batch of colex ranks of k-subsets of range(n).

    Args:
        ranks: int64 array with entries in [0, binom(n, k))
        k: Subset size
        n: Universe size

    Returns:
        (len(ranks), k) int64 array of increasing rows
    """
    remaining = np.array(ranks, dtype=np.int64, copy=True)
    rows = np.empty((remaining.shape[0], k), dtype=np.int64)
    for i in range(k, 0, -1):
        table = _comb_table(n, i)
        c = np.searchsorted(table, remaining, side="right") - 1
        rows[:, i - 1] = c
        remaining -= table[c]
    return rows


class SubsetCursor:
    """
    Enumerator of the t-subsets of a ground list in colex order.

    The state is the index tuple of the current subset. Advancing finds the
    lowest index that can move up by one and resets the indices below it,
    which is constant work on average.
    """

    def __init__(self, ground: Sequence[int], t: int) -> None:
        """
        Initialize SubsetCursor.

        Args:
            ground: Ordered distinct vertex ids
            t: Subset size

        Raises:
            InvalidArguments: If t is negative or larger than the ground list
        """
        if t < 0 or t > len(ground):
            raise InvalidArguments(
                f"cannot choose {t} elements from a ground list of {len(ground)}"
            )
        self.ground = tuple(ground)
        self.t = t
        self.state: list[int] | None = list(range(t))
        self.emitted = 0

    def __len__(self) -> int:
        return binomial(len(self.ground), self.t)

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return self

    def __next__(self) -> tuple[int, ...]:
        state = self.state
        if state is None:
            raise StopIteration

        current = tuple(self.ground[i] for i in state)
        self.emitted += 1
        self._advance(state)
        return current

    def _advance(self, state: list[int]) -> None:
        t = self.t
        size = len(self.ground)
        j = 0
        while j < t:
            ceiling = state[j + 1] if j + 1 < t else size
            if state[j] + 1 < ceiling:
                break
            state[j] = j
            j += 1

        if j == t:
            self.state = None
        else:
            state[j] += 1

    @property
    def exhausted(self) -> bool:
        """Check whether every subset has been emitted."""
        return self.state is None


def subsets(ground: Sequence[int], t: int) -> SubsetCursor:
    """
    Enumerate the t-subsets of a ground list.

    Args:
        ground: Ordered distinct vertex ids
        t: Subset size

    Returns:
        Cursor emitting binom(len(ground), t) tuples in colex order of indices

    Raises:
        InvalidArguments: If t > len(ground)
    """
    return SubsetCursor(ground, t)
