"""Undirected simple graphs over integer vertex ids 0..n-1.

Graphs are immutable after construction and every operation here is a pure
function, so values can be shared freely across parallel sweeps.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class Graph:
    """Immutable adjacency-list graph.

    ``adj[v]`` is the sorted tuple of neighbours of ``v``.  ``labels``, when
    present, carries one display string per vertex (paths use 1-based names
    x1..xn, cycles 0-based x0..x(n-1), matching the usual conventions).
    """

    n: int
    adj: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.adj) != self.n:
            raise ValueError(f"adjacency length {len(self.adj)} != n={self.n}")
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError("labels length mismatch")
        for v, nbrs in enumerate(self.adj):
            if list(nbrs) != sorted(set(nbrs)):
                raise ValueError(f"adjacency of {v} not sorted/duplicate-free")
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise ValueError(f"neighbour {u} of {v} out of range")
                if u == v:
                    raise ValueError(f"self-loop at {v}")
                if v not in self.adj[u]:
                    raise ValueError(f"edge {v}-{u} not symmetric")

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple((u, v) for u in range(self.n) for v in self.adj[u] if u < v)

    @property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)


def from_edges(n: int, edges: Iterable[tuple[int, int]],
               labels: Sequence[str] | None = None) -> Graph:
    """Build a Graph from an edge list, deduplicating and sorting."""
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) out of range for n={n}")
        if u == v:
            raise ValueError(f"self-loop ({u},{v})")
        nbrs[u].add(v)
        nbrs[v].add(u)
    adj = tuple(tuple(sorted(s)) for s in nbrs)
    return Graph(n, adj, tuple(labels) if labels is not None else None)


def make_path(n: int, letter: str = "x") -> Graph:
    """Path on n >= 1 vertices; labels use 1-based indices (x1..xn)."""
    if n < 1:
        raise ValueError(f"path order must be >= 1, got {n}")
    labels = tuple(f"{letter}{i + 1}" for i in range(n))
    return from_edges(n, [(i, i + 1) for i in range(n - 1)], labels)


def make_cycle(n: int, letter: str = "x") -> Graph:
    """Cycle on n >= 3 vertices; labels use 0-based indices (x0..x(n-1))."""
    if n < 3:
        raise ValueError(f"cycle order must be >= 3, got {n}")
    labels = tuple(f"{letter}{i}" for i in range(n))
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)], labels)


def _check_vertex_set(g: Graph, vs: Iterable[int]) -> frozenset[int]:
    s = frozenset(vs)
    for v in s:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for graph of order {g.n}")
    return s


def neighborhood(g: Graph, vs: Iterable[int]) -> tuple[int, ...]:
    """Vertices outside ``vs`` adjacent to at least one member of ``vs``."""
    s = _check_vertex_set(g, vs)
    out: set[int] = set()
    for v in s:
        out.update(g.adj[v])
    return tuple(sorted(out - s))


def components(g: Graph, removed: Iterable[int] = ()) -> list[tuple[int, ...]]:
    """Connected components of g minus ``removed``, ordered by smallest member."""
    gone = _check_vertex_set(g, removed)
    seen: set[int] = set(gone)
    comps: list[tuple[int, ...]] = []
    for start in range(g.n):
        if start in seen:
            continue
        stack = [start]
        seen.add(start)
        comp = [start]
        while stack:
            v = stack.pop()
            for u in g.adj[v]:
                if u not in seen:
                    seen.add(u)
                    comp.append(u)
                    stack.append(u)
        comps.append(tuple(sorted(comp)))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(components(g)) == 1


def induced_subgraph(g: Graph, vs: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced on ``vs``.

    Returns the new graph and the id remapping: position i of the returned
    tuple holds the original id of the new vertex i.
    """
    keep = sorted(_check_vertex_set(g, vs))
    index = {old: new for new, old in enumerate(keep)}
    adj = tuple(tuple(index[u] for u in g.adj[old] if u in index) for old in keep)
    labels = tuple(g.label(old) for old in keep) if g.labels is not None else None
    return Graph(len(keep), adj, labels), tuple(keep)


def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise ValueError("empty graph has no minimum degree")
    return min(len(nbrs) for nbrs in g.adj)


def is_complete(g: Graph) -> bool:
    return all(len(nbrs) == g.n - 1 for nbrs in g.adj)


def adjacency_masks(g: Graph) -> list[int]:
    """Per-vertex neighbour bitmasks (bit u set in masks[v] iff u ~ v)."""
    masks = [0] * g.n
    for v in range(g.n):
        m = 0
        for u in g.adj[v]:
            m |= 1 << u
        masks[v] = m
    return masks


def to_json(g: Graph) -> str:
    """Serialize to the interchange format {"n", "edges", "labels"?}."""
    doc: dict = {"n": g.n, "edges": [list(e) for e in g.edges]}
    if g.labels is not None:
        doc["labels"] = list(g.labels)
    return json.dumps(doc, sort_keys=True)


def from_json(text: str) -> Graph:
    doc = json.loads(text)
    labels = doc.get("labels")
    return from_edges(doc["n"], [tuple(e) for e in doc["edges"]], labels)


def to_dot(g: Graph, highlight: Iterable[int] = ()) -> str:
    """DOT export for visual inspection; ``highlight`` vertices are filled."""
    marked = _check_vertex_set(g, highlight)
    lines = ["graph G {"]
    for v in range(g.n):
        attrs = [f'label="{g.label(v)}"']
        if v in marked:
            attrs.append('style=filled fillcolor=lightcoral')
        lines.append(f'  {v} [{" ".join(attrs)}];')
    for u, v in g.edges:
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
