"""
Input validators.

This module provides validation functions for the values the package
accepts from callers and from the command line:
- Vertex ids and vertex subsets
- Uniformity
- Probabilities and densities written as decimals or fractions
- 64-bit seeds
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import TYPE_CHECKING


if TYPE_CHECKING:
    from collections.abc import Sequence


SEED_LIMIT = 2**64

_FRACTION_PATTERN = re.compile(r"^\s*(\d+(\.\d*)?|\.\d+)(\s*/\s*\d+)?\s*$")


def validate_vertex(v: int, n: int) -> bool:
    """
    Validate a vertex id.

    Args:
        v: Vertex id
        n: Vertex count

    Returns:
        True if 0 <= v < n, False otherwise
    """
    return 0 <= v < n


def validate_subset(subset: Sequence[int]) -> bool:
    """
    Validate a subset given as a sequence of ids.

    Args:
        subset: Candidate subset

    Returns:
        True if the ids are non-negative and strictly increasing
    """
    if any(v < 0 for v in subset):
        return False

    return all(a < b for a, b in zip(subset, subset[1:], strict=False))


def validate_uniformity(k: int, n: int) -> tuple[bool, str]:
    """
    Validate a uniformity against a vertex count.

    Args:
        k: Uniformity (edge size)
        n: Vertex count

    Returns:
        Tuple of (is_valid, error_message). error_message is empty when valid.
    """
    if n < 0:
        return False, f"vertex count must be non-negative, got {n}"

    if k < 1:
        return False, f"uniformity must be at least 1, got {k}"

    return True, ""


def validate_seed(seed: int) -> bool:
    """
    Validate a seed.

    Args:
        seed: Seed value

    Returns:
        True if the seed is a 64-bit unsigned integer
    """
    return 0 <= seed < SEED_LIMIT


def parse_fraction(text: str) -> Fraction | None:
    """
    Parse a decimal ("0.25") or fraction ("1/4") without rounding.

    Args:
        text: Text to parse

    Returns:
        The exact value or None if the text is malformed or divides by zero
    """
    if not text or not _FRACTION_PATTERN.match(text):
        return None

    try:
        return Fraction(text.replace(" ", ""))
    except (ValueError, ZeroDivisionError):
        return None


def validate_probability(p: Fraction) -> bool:
    """
    Validate a probability.

    Args:
        p: Probability

    Returns:
        True if 0 <= p <= 1
    """
    return 0 <= p <= 1
