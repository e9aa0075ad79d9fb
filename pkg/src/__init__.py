"""
kpartite - complete balanced k-partite subgraphs of dense hypergraphs.

Given a k-uniform hypergraph with n vertices and edge density d, the finder
returns k disjoint vertex sets of size
t = floor((ln n / ln(16/d)) ** (1/(k-1))) such that every choice of one
vertex per set is an edge. Features:
- Deterministic recursive search with exact parameter arithmetic
- Unconditional witness verification
- Brute-force oracles for small instances
- Seeded instance generators and a runtime-scaling benchmark
"""

__version__ = "1.0.0"
__author__ = "Filipe Pereira"
__description__ = "Complete k-partite subgraph search in k-uniform hypergraphs"
