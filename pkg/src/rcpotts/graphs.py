"""Finite multigraphs with positional edge identity.

Loops and parallel edges are first class: deletion-contraction and Poisson
thickening both produce them.  Edges are identified by their position in the
edge list, so parallel edges stay distinguishable and a subset of edges is
just a bitmask over positions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable


class EdgeSubsetError(ValueError):
    """Raised when a bitmask does not fit the graph it is used with."""


@dataclass(frozen=True)
class Multigraph:
    """Undirected multigraph on vertices 0..n-1.

    ``edges`` is an ordered tuple of unordered endpoint pairs; a pair (v, v)
    is a loop and repeated pairs are parallel edges.  Instances are immutable;
    delete/contract return new graphs.
    """

    n: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        norm = []
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u},{v}) out of range for n={self.n}")
            norm.append((u, v) if u <= v else (v, u))
        object.__setattr__(self, "edges", tuple(norm))

    @property
    def m(self) -> int:
        return len(self.edges)

    def full_subset(self) -> int:
        return (1 << self.m) - 1

    def check_subset(self, a: int) -> None:
        if a < 0 or a >> self.m:
            raise EdgeSubsetError(
                f"subset 0b{a:b} does not fit a graph with {self.m} edges"
            )

    def subset_edges(self, a: int) -> list[tuple[int, int]]:
        self.check_subset(a)
        return [e for i, e in enumerate(self.edges) if a >> i & 1]

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1  # a loop contributes 2 to its vertex
        return deg


def from_json_dict(d: dict) -> Multigraph:
    """Build a graph from the {"n": ..., "edges": [[u,v], ...]} file format."""
    if not isinstance(d, dict) or "n" not in d or "edges" not in d:
        raise ValueError('graph JSON must be {"n": int, "edges": [[u,v], ...]}')
    return Multigraph(int(d["n"]), tuple((int(u), int(v)) for u, v in d["edges"]))


def to_json_dict(g: Multigraph) -> dict:
    return {"n": g.n, "edges": [[u, v] for u, v in g.edges]}


class _UnionFind:
    __slots__ = ("parent",)

    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        p = self.parent
        root = x
        while p[root] != root:
            root = p[root]
        while p[x] != root:
            p[x], x = root, p[x]
        return root

    def union(self, x: int, y: int) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        self.parent[ry] = rx
        return True


def component_count(g: Multigraph, a: int) -> int:
    """Number of connected components of (V, A), isolated vertices included."""
    g.check_subset(a)
    uf = _UnionFind(g.n)
    k = g.n
    for i, (u, v) in enumerate(g.edges):
        if a >> i & 1 and uf.union(u, v):
            k -= 1
    return k


def rank_corank(g: Multigraph, a: int) -> tuple[int, int]:
    """Rank r(A) = |V| - k(A) and co-rank c(A) = |A| - |V| + k(A)."""
    k = component_count(g, a)
    na = bin(a).count("1")
    return g.n - k, na - g.n + k


def is_connected(g: Multigraph) -> bool:
    return g.n <= 1 or component_count(g, g.full_subset()) == 1


def delete(g: Multigraph, e: int) -> Multigraph:
    """Remove the edge at position ``e``; vertices are untouched."""
    if not 0 <= e < g.m:
        raise IndexError(f"edge index {e} out of range")
    return Multigraph(g.n, g.edges[:e] + g.edges[e + 1 :])


def contract(g: Multigraph, e: int) -> Multigraph:
    """Contract the edge at position ``e``.

    The smaller endpoint absorbs the larger one and vertices above the larger
    index shift down, so the renumbering is deterministic.  Contracting a loop
    just deletes it.  Parallel copies of the contracted edge become loops.
    """
    if not 0 <= e < g.m:
        raise IndexError(f"edge index {e} out of range")
    u, v = g.edges[e]
    if u == v:
        return delete(g, e)
    # u < v by normalization: v merges into u, indices > v shift down
    def remap(x: int) -> int:
        if x == v:
            return u
        return x - 1 if x > v else x

    new_edges = tuple(
        (remap(a), remap(b)) for i, (a, b) in enumerate(g.edges) if i != e
    )
    return Multigraph(g.n - 1, new_edges)


def canonical_key(g: Multigraph):
    """Hashable key, stable across runs and delete/contract renumbering.

    Graphs that are equal as labelled multigraphs (same n, same edge multiset)
    share a key.  This is not isomorphism testing; it only has to be
    deterministic so deletion-contraction memoization is sound.
    """
    return (g.n, tuple(sorted(g.edges)))


def is_even(g: Multigraph) -> bool:
    """True iff every vertex has even degree (loops count twice)."""
    return all(d % 2 == 0 for d in g.degrees())


# Small named graphs used throughout the test-suites and demos.

def cycle(k: int) -> Multigraph:
    return Multigraph(k, tuple((i, (i + 1) % k) for i in range(k)))


def path(k: int) -> Multigraph:
    return Multigraph(k, tuple((i, i + 1) for i in range(k - 1)))


def complete(k: int) -> Multigraph:
    return Multigraph(k, tuple((i, j) for i in range(k) for j in range(i + 1, k)))


def triangle() -> Multigraph:
    return cycle(3)
