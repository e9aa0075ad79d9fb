"""Tests for the search parameters t, w and s."""

import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.core.combinatorics import binomial
from src.core.errors import InvalidArguments, InvalidDensity, NoEdges
from src.core.hypergraph import Hypergraph
from src.core.parameters import (
    compute_s,
    compute_t,
    compute_w,
    density_floor_holds,
    derive_params,
    forced_params,
    params_from_counts,
)


@pytest.mark.parametrize(
    ("n", "d", "k", "expected"),
    [
        (256, Fraction(1), 2, 2),
        (255, Fraction(1), 2, 1),
        (4096, Fraction(1), 2, 3),
        (65536, Fraction(1), 2, 4),
        (65536, Fraction(1), 3, 2),
        (65535, Fraction(1), 3, 1),
        (1024, Fraction(1, 2), 2, 2),
        (16, Fraction(1), 2, 1),
        (1, Fraction(1), 2, 0),
    ],
)
def test_compute_t(n, d, k, expected):
    assert compute_t(n, d, k) == expected


def test_compute_t_errors():
    with pytest.raises(NoEdges):
        compute_t(10, Fraction(0), 2)
    with pytest.raises(InvalidDensity):
        compute_t(10, Fraction(3, 2), 2)
    with pytest.raises(InvalidArguments):
        compute_t(10, Fraction(1), 1)


@given(
    st.integers(min_value=1, max_value=10**9),
    st.fractions(min_value=Fraction(1, 10**6), max_value=1, max_denominator=10**6),
    st.integers(min_value=2, max_value=5),
)
def test_compute_t_is_the_largest_fitting_value(n, d, k):
    t = compute_t(n, d, k)
    lhs = math.log(16 / d)

    assert t ** (k - 1) * lhs <= math.log(n) + 1e-9
    assert (t + 1) ** (k - 1) * lhs > math.log(n) - 1e-9


def test_compute_w_and_s():
    assert compute_w(2, Fraction(1)) == 8
    assert compute_w(2, Fraction(1, 2)) == 16
    assert compute_w(3, Fraction(1, 3)) == 36
    assert compute_s(256, 2, Fraction(1), 2) == 16
    assert compute_s(4096, 2, Fraction(1), 3) == 64
    assert compute_s(60, 3, Fraction(1), 2) == 111


def test_params_for_complete_graph():
    params = params_from_counts(256, binomial(256, 2), 2)

    assert (params.t, params.w, params.s) == (2, 8, 16)
    assert params.d == 1
    assert params.search_space == 28
    assert params.within_polynomial_bound
    assert density_floor_holds(params)


def test_params_explain_lines():
    lines = params_from_counts(256, binomial(256, 2), 2).explain()

    assert "t = 2" in lines
    assert "d = 32640/32640" in lines
    assert "binom(w,t) < n^3.6: yes" in lines


def test_params_preconditions():
    with pytest.raises(NoEdges):
        params_from_counts(10, 0, 2)
    with pytest.raises(InvalidArguments):
        params_from_counts(10, 5, 1)
    with pytest.raises(InvalidArguments):
        params_from_counts(2, 1, 3)


@given(
    st.integers(min_value=2, max_value=5000).flatmap(
        lambda n: st.tuples(st.just(n), st.integers(min_value=1, max_value=binomial(n, 2)))
    )
)
def test_guarantees_whenever_t_reaches_two(counts):
    n, m = counts
    params = params_from_counts(n, m, 2)
    if params.t >= 2:
        assert params.w <= n
        assert params.s <= n
        assert params.s > params.t
        assert density_floor_holds(params)


def test_derive_params_matches_counts(small_hypergraph):
    assert derive_params(small_hypergraph) == params_from_counts(5, 5, 3)


def test_forced_params_caps_w_at_n(mocker):
    warning = mocker.patch("src.core.parameters.logger.warning")
    h = Hypergraph.complete(8, 2)
    params = forced_params(h, 3)

    assert params.t == 3
    assert params.w == 8
    assert params.s == 1
    warning.assert_called_once()
    assert "capping at n=8" in warning.call_args.args[0]


def test_forced_params_preconditions():
    with pytest.raises(InvalidArguments):
        forced_params(Hypergraph.complete(8, 2), 0)
    with pytest.raises(NoEdges):
        forced_params(Hypergraph.empty(8, 2), 2)


@given(
    st.integers(min_value=2, max_value=5),
    st.integers(min_value=5, max_value=10**6),
    st.fractions(min_value=Fraction(1, 10**4), max_value=1, max_denominator=10**4),
)
def test_w_fits_whenever_t_reaches_two(k, n, d):
    m = max(1, math.floor(d * binomial(n, k)))

    params = params_from_counts(n, m, k)
    if params.t >= 2:
        assert params.w <= n
        assert params.s <= params.link_universe


@pytest.mark.slow
def test_parameter_sweep_over_ten_thousand_samples():
    rng = np.random.default_rng(2024)
    for _ in range(10_000):
        k = int(rng.integers(2, 6))
        n = int(rng.integers(k, 10**6 + 1))
        universe = binomial(n, k)
        fraction = int(rng.integers(1, 2**53, endpoint=True))
        m = max(1, (universe * fraction >> 53) >> int(rng.integers(0, 12)))

        params = params_from_counts(n, m, k)
        if params.t >= 2:
            assert params.w <= n
            if k == 2:
                assert params.s > params.t
