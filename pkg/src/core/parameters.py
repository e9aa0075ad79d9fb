"""
Search parameters t, w and s.

For a k-uniform hypergraph with n vertices and density d = m / binom(n, k):

    t = floor((ln n / ln(16/d)) ** (1 / (k - 1)))
    w = ceil(4t / d)
    s = ceil((d/4) ** t * binom(n, k - 1))

d is kept as an exact Fraction so w and s are exact ceilings. t is
estimated in floating point and then settled with an integer comparison:
t ** (k-1) * ln(16/d) <= ln n holds iff (16 * den) ** e <= n * num ** e
with e = t ** (k-1) and d = num / den.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING

from src.core import logger
from src.core.combinatorics import binomial
from src.core.errors import (
    InternalInvariantViolation,
    InvalidArguments,
    InvalidDensity,
    NoEdges,
)


if TYPE_CHECKING:
    from src.core.hypergraph import Hypergraph


@dataclass(frozen=True)
class ParamSet:
    """Parameters of one search level."""

    n: int
    m: int
    k: int
    d: Fraction
    t: int
    w: int
    s: int

    @property
    def universe(self) -> int:
        """binom(n, k), the denominator of d before reduction."""
        return binomial(self.n, self.k)

    @property
    def link_universe(self) -> int:
        """binom(n, k - 1), the number of candidate link sets."""
        return binomial(self.n, self.k - 1)

    @property
    def search_space(self) -> int:
        """Number of candidate sets T, binom(w, t)."""
        return binomial(self.w, self.t)

    @property
    def within_polynomial_bound(self) -> bool:
        """Check binom(w, t) < n ** 3.6, evaluated as binom(w, t) ** 5 < n ** 18."""
        return self.search_space**5 < self.n**18

    @property
    def density_text(self) -> str:
        """d written as the unreduced fraction m/binom(n,k)."""
        return f"{self.m}/{self.universe}"

    def explain(self) -> list[str]:
        """
        Render the parameters for --explain output.

        Returns:
            One "name = value" line per parameter
        """
        return [
            f"k = {self.k}",
            f"n = {self.n}",
            f"m = {self.m}",
            f"d = {self.density_text}",
            f"t = {self.t}",
            f"w = {self.w}",
            f"s = {self.s}",
            f"binom(w,t) = {self.search_space}",
            f"binom(w,t) < n^3.6: {'yes' if self.within_polynomial_bound else 'no'}",
        ]


def _check_density(d: Fraction) -> None:
    if d == 0:
        raise NoEdges("density is zero; the hypergraph has no edges")
    if d < 0 or d > 1:
        raise InvalidDensity(f"density {d} outside (0, 1]")


def _fits(t: int, n: int, d: Fraction, k: int) -> bool:
    """Exact test of t ** (k-1) * ln(16/d) <= ln n."""
    e = t ** (k - 1)
    return (16 * d.denominator) ** e <= n * d.numerator**e


def compute_t(n: int, d: Fraction, k: int) -> int:
    """
    Compute the target part size.

    Args:
        n: Vertex count, at least 1
        d: Edge density in (0, 1]
        k: Uniformity, at least 2

    Returns:
        Largest t with t ** (k-1) * ln(16/d) <= ln n

    Raises:
        NoEdges: If d == 0
        InvalidDensity: If d is negative or above 1
        InvalidArguments: If n < 1 or k < 2
    """
    d = Fraction(d)
    _check_density(d)
    if n < 1 or k < 2:
        raise InvalidArguments(f"compute_t needs n >= 1 and k >= 2, got n={n}, k={k}")

    ratio = math.log(n) / (math.log(16 * d.denominator) - math.log(d.numerator))
    t = max(math.floor(ratio ** (1 / (k - 1))), 0)

    while t > 0 and not _fits(t, n, d, k):
        t -= 1
    while _fits(t + 1, n, d, k):
        t += 1
    return t


def compute_w(t: int, d: Fraction) -> int:
    """
    Compute the size of the high-degree vertex set, ceil(4t/d).

    Raises:
        NoEdges: If d == 0
        InvalidDensity: If d is outside (0, 1]
    """
    d = Fraction(d)
    _check_density(d)
    return math.ceil(4 * t / d)


def compute_s(n: int, k: int, d: Fraction, t: int) -> int:
    """
    Compute the link-size threshold, ceil((d/4) ** t * binom(n, k-1)).

    Raises:
        NoEdges: If d == 0
        InvalidDensity: If d is outside (0, 1]
    """
    d = Fraction(d)
    _check_density(d)
    return math.ceil((d / 4) ** t * binomial(n, k - 1))


def density_floor_holds(params: ParamSet) -> bool:
    """
    Check d >= 16 / sqrt(n), which t >= 2 implies.

    Evaluated exactly as d ** 2 * n >= 256.
    """
    return params.d**2 * params.n >= 256


def params_from_counts(n: int, m: int, k: int) -> ParamSet:
    """
    Derive parameters from counts alone.

    Args:
        n: Vertex count
        m: Edge count
        k: Uniformity, at least 2

    Returns:
        ParamSet for a hypergraph with these counts

    Raises:
        NoEdges: If m == 0
        InvalidArguments: If k < 2 or n < k
        InternalInvariantViolation: If t >= 2 but w > n or s > binom(n, k-1)
    """
    if k < 2:
        raise InvalidArguments(f"parameters need uniformity at least 2, got {k}")
    if n < k:
        raise InvalidArguments(f"parameters need n >= k, got n={n}, k={k}")
    if m == 0:
        raise NoEdges("the hypergraph has no edges")

    d = Fraction(m, binomial(n, k))
    t = compute_t(n, d, k)
    w = compute_w(t, d)
    s = compute_s(n, k, d, t)
    params = ParamSet(n=n, m=m, k=k, d=d, t=t, w=w, s=s)

    if t >= 2:
        if w > n:
            raise InternalInvariantViolation(f"w={w} > n={n} with t={t}")
        if s > params.link_universe:
            raise InternalInvariantViolation(f"s={s} > binom(n,k-1) with t={t}")
    return params


def derive_params(hypergraph: Hypergraph) -> ParamSet:
    """
    Derive the search parameters of a hypergraph.

    Args:
        hypergraph: k-uniform hypergraph, k >= 2, with at least one edge

    Returns:
        ParamSet satisfying all of its invariants

    Raises:
        NoEdges: If the hypergraph has no edges
    """
    return params_from_counts(hypergraph.n, hypergraph.m, hypergraph.k)


def forced_params(hypergraph: Hypergraph, forced_t: int) -> ParamSet:
    """
    Parameters with t replaced by forced_t and w, s recomputed from it.

    w is capped at n, since a forced t carries no guarantee that ceil(4t/d)
    vertices exist.

    Raises:
        NoEdges: If the hypergraph has no edges
        InvalidArguments: If forced_t < 1 or k < 2
    """
    if forced_t < 1:
        raise InvalidArguments(f"forced t must be at least 1, got {forced_t}")
    n, m, k = hypergraph.n, hypergraph.m, hypergraph.k
    if k < 2:
        raise InvalidArguments(f"parameters need uniformity at least 2, got {k}")
    if m == 0:
        raise NoEdges("the hypergraph has no edges")

    d = hypergraph.density()
    w = compute_w(forced_t, d)
    if w > n:
        logger.warning(f"Forced t={forced_t} asks for w={w} top vertices; capping at n={n}")
        w = n
    s = compute_s(n, k, d, forced_t)
    return ParamSet(n=n, m=m, k=k, d=d, t=forced_t, w=w, s=s)
