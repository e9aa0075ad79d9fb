"""
Core module for kpartite.

This module contains the core functionality including:
- Configuration management and logging
- Input validation and the exception hierarchy
- Combinatorial substrate (binomials, colex ranks, subset enumeration)
- Hypergraph storage, search parameters and the partite finder
- Witness verification, brute-force oracles and instance generators
- Text file formats
"""

from src.core import (
    combinatorics,
    config,
    errors,
    finder,
    formats,
    generators,
    hypergraph,
    logger,
    parameters,
    validators,
    verifier,
)


__all__ = [
    "combinatorics",
    "config",
    "errors",
    "finder",
    "formats",
    "generators",
    "hypergraph",
    "logger",
    "parameters",
    "validators",
    "verifier",
]
