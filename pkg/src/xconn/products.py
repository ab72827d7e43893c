"""Strong and Cartesian products with layer/slice queries and cut structure.

Product vertices are pairs (i, j) of factor ids, packed row-major as
``i * n + j``.  Two product vertices are adjacent when

  (i)   i1 == i2 and j1 ~ j2            (both products)
  (ii)  j1 == j2 and i1 ~ i2            (both products)
  (iii) i1 ~ i2 and j1 ~ j2             (strong product only)

An I-set is a product cut of the form S1 x V2 or V1 x S2 with S_i a vertex
cut of its factor; an L-set is (S1 x A2) u (S1 x S2) u (A1 x S2) with A_i a
component of G_i - S_i.  Every minimum vertex cut of a strong product of
connected graphs is one of the two.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable

from .graph import Graph, components, from_edges, induced_subgraph, make_cycle, make_path


@dataclass(frozen=True)
class ProductGraph:
    """A product graph plus the factor metadata needed for layer queries."""

    graph: Graph
    m: int
    n: int
    kind: str  # "strong" | "cartesian"

    def __post_init__(self) -> None:
        if self.kind not in ("strong", "cartesian"):
            raise ValueError(f"unknown product kind {self.kind!r}")
        if self.graph.n != self.m * self.n:
            raise ValueError("vertex count does not match factor orders")

    def id(self, i: int, j: int) -> int:
        if not (0 <= i < self.m and 0 <= j < self.n):
            raise ValueError(f"coordinate ({i},{j}) out of range")
        return i * self.n + j

    def coords(self, v: int) -> tuple[int, int]:
        if not 0 <= v < self.graph.n:
            raise ValueError(f"vertex {v} out of range")
        return divmod(v, self.n)

    def factor1(self) -> Graph:
        """Factor 1 recovered from the layer at j=0 (isomorphic by construction)."""
        sub, _ = induced_subgraph(self.graph, [self.id(i, 0) for i in range(self.m)])
        return sub

    def factor2(self) -> Graph:
        sub, _ = induced_subgraph(self.graph, [self.id(0, j) for j in range(self.n)])
        return sub


def _product(g1: Graph, g2: Graph, strong: bool) -> ProductGraph:
    if g1.n == 0 or g2.n == 0:
        raise ValueError("product factors must be nonempty")
    m, n = g1.n, g2.n
    edges: list[tuple[int, int]] = []
    for i in range(m):
        for j in range(n):
            v = i * n + j
            for j2 in g2.adj[j]:
                if j2 > j:
                    edges.append((v, i * n + j2))
            for i2 in g1.adj[i]:
                if i2 > i:
                    edges.append((v, i2 * n + j))
                if strong:
                    for j2 in g2.adj[j]:
                        if i2 > i:
                            edges.append((v, i2 * n + j2))
    labels = None
    if g1.labels is not None and g2.labels is not None:
        labels = tuple(f"({g1.labels[i]},{g2.labels[j]})"
                       for i in range(m) for j in range(n))
    graph = from_edges(m * n, edges, labels)
    return ProductGraph(graph, m, n, "strong" if strong else "cartesian")


def strong_product(g1: Graph, g2: Graph) -> ProductGraph:
    return _product(g1, g2, strong=True)


def cartesian_product(g1: Graph, g2: Graph) -> ProductGraph:
    return _product(g1, g2, strong=False)


FAMILIES = ("pxp", "cxp", "cxc")


def family_product(family: str, m: int, n: int, kind: str = "strong") -> ProductGraph:
    """Build a path/cycle product: 'pxp' = Pm x Pn, 'cxp' = Cm x Pn, 'cxc' = Cm x Cn."""
    if family == "pxp":
        f1, f2 = make_path(m, "x"), make_path(n, "y")
    elif family == "cxp":
        f1, f2 = make_cycle(m, "x"), make_path(n, "y")
    elif family == "cxc":
        f1, f2 = make_cycle(m, "x"), make_cycle(n, "y")
    else:
        raise ValueError(f"unknown family {family!r}")
    return _product(f1, f2, strong=(kind == "strong"))


def layer(pg: ProductGraph, axis: str, index: int) -> tuple[int, ...]:
    """Vertex set of the factor-``axis`` layer at ``index`` in the other factor.

    axis='factor1' gives a copy of factor 1 at a fixed factor-2 vertex;
    axis='factor2' a copy of factor 2 at a fixed factor-1 vertex.
    """
    if axis == "factor1":
        if not 0 <= index < pg.n:
            raise ValueError(f"layer index {index} out of range")
        return tuple(pg.id(i, index) for i in range(pg.m))
    if axis == "factor2":
        if not 0 <= index < pg.m:
            raise ValueError(f"layer index {index} out of range")
        return tuple(pg.id(index, j) for j in range(pg.n))
    raise ValueError(f"axis must be 'factor1' or 'factor2', got {axis!r}")


def slice_of_set(pg: ProductGraph, s: Iterable[int], axis: str, index: int) -> tuple[int, ...]:
    """Intersection of ``s`` with the indicated layer."""
    return tuple(sorted(set(s) & set(layer(pg, axis, index))))


def _is_vertex_cut(factor: Graph, cut: frozenset[int]) -> bool:
    if not cut or cut == frozenset(range(factor.n)):
        return False
    return len(components(factor, cut)) >= 2


def make_i_set(pg: ProductGraph, factor_cut: Iterable[int], axis: str) -> tuple[int, ...]:
    """S1 x V2 (axis='factor1') or V1 x S2 (axis='factor2') for a factor vertex cut."""
    cut = frozenset(factor_cut)
    if axis == "factor1":
        if not _is_vertex_cut(pg.factor1(), cut):
            raise ValueError("factor 1 set is not a vertex cut of factor 1")
        return tuple(sorted(pg.id(i, j) for i in cut for j in range(pg.n)))
    if axis == "factor2":
        if not _is_vertex_cut(pg.factor2(), cut):
            raise ValueError("factor 2 set is not a vertex cut of factor 2")
        return tuple(sorted(pg.id(i, j) for i in range(pg.m) for j in cut))
    raise ValueError(f"axis must be 'factor1' or 'factor2', got {axis!r}")


def make_l_set(pg: ProductGraph, s1: Iterable[int], a1: Iterable[int],
               s2: Iterable[int], a2: Iterable[int]) -> tuple[int, ...]:
    """(S1 x A2) u (S1 x S2) u (A1 x S2) with A_i a component of factor_i - S_i."""
    f1, f2 = pg.factor1(), pg.factor2()
    s1, a1, s2, a2 = frozenset(s1), frozenset(a1), frozenset(s2), frozenset(a2)
    if not _is_vertex_cut(f1, s1):
        raise ValueError("S1 is not a vertex cut of factor 1")
    if not _is_vertex_cut(f2, s2):
        raise ValueError("S2 is not a vertex cut of factor 2")
    if tuple(sorted(a1)) not in components(f1, s1):
        raise ValueError("A1 is not a component of factor 1 minus S1")
    if tuple(sorted(a2)) not in components(f2, s2):
        raise ValueError("A2 is not a component of factor 2 minus S2")
    out = {pg.id(i, j) for i in s1 for j in a2 | s2}
    out |= {pg.id(i, j) for i in a1 for j in s2}
    return tuple(sorted(out))


@dataclass(frozen=True)
class CutClassification:
    """Structure verdict for a product vertex cut, with a rebuild certificate."""

    verdict: str  # "i_set" | "l_set" | "neither"
    axis: str | None = None                      # i_set only
    factor_cut: tuple[int, ...] | None = None    # i_set only
    s1: tuple[int, ...] | None = None            # l_set only
    a1: tuple[int, ...] | None = None
    s2: tuple[int, ...] | None = None
    a2: tuple[int, ...] | None = None

    def rebuild(self, pg: ProductGraph) -> tuple[int, ...]:
        if self.verdict == "i_set":
            return make_i_set(pg, self.factor_cut, self.axis)
        if self.verdict == "l_set":
            return make_l_set(pg, self.s1, self.a1, self.s2, self.a2)
        raise ValueError("no certificate for verdict 'neither'")


def classify_cut(pg: ProductGraph, cut: Iterable[int]) -> CutClassification:
    """Classify a vertex cut of the product as i_set, l_set, or neither.

    Decompositions are tried in a fixed order (I on factor 1, I on factor 2,
    then L recovered from the row slices), so verdicts are deterministic.
    """
    s = frozenset(cut)
    for v in s:
        if not 0 <= v < pg.graph.n:
            raise ValueError(f"cut vertex {v} out of range")
    if len(components(pg.graph, s)) < 2:
        raise ValueError("set is not a vertex cut of the product")

    f1, f2 = pg.factor1(), pg.factor2()
    rows = [frozenset(j for j in range(pg.n) if pg.id(i, j) in s) for i in range(pg.m)]
    cols = [frozenset(i for i in range(pg.m) if pg.id(i, j) in s) for j in range(pg.n)]
    full2 = frozenset(range(pg.n))
    full1 = frozenset(range(pg.m))

    s1 = frozenset(i for i in range(pg.m) if rows[i] == full2)
    if s1 and all(rows[i] in (full2, frozenset()) for i in range(pg.m)) \
            and _is_vertex_cut(f1, s1):
        return CutClassification("i_set", axis="factor1", factor_cut=tuple(sorted(s1)))

    s2 = frozenset(j for j in range(pg.n) if cols[j] == full1)
    if s2 and all(cols[j] in (full1, frozenset()) for j in range(pg.n)) \
            and _is_vertex_cut(f2, s2):
        return CutClassification("i_set", axis="factor2", factor_cut=tuple(sorted(s2)))

    distinct = sorted({r for r in rows if r}, key=len)
    if len(distinct) == 2 and distinct[0] < distinct[1]:
        cut2, big = distinct
        comp2 = big - cut2
        rows1 = frozenset(i for i in range(pg.m) if rows[i] == big)
        rows_a1 = frozenset(i for i in range(pg.m) if rows[i] == cut2)
        if (_is_vertex_cut(f2, cut2)
                and tuple(sorted(comp2)) in components(f2, cut2)
                and _is_vertex_cut(f1, rows1)
                and tuple(sorted(rows_a1)) in components(f1, rows1)):
            cert = CutClassification(
                "l_set",
                s1=tuple(sorted(rows1)), a1=tuple(sorted(rows_a1)),
                s2=tuple(sorted(cut2)), a2=tuple(sorted(comp2)),
            )
            if frozenset(cert.rebuild(pg)) == s:
                return cert
    return CutClassification("neither")


def verify_product_structure(pg: ProductGraph) -> bool:
    """Re-derive the product from its layer-recovered factors and compare."""
    rebuilt = _product(pg.factor1(), pg.factor2(), strong=(pg.kind == "strong"))
    return rebuilt.graph.adj == pg.graph.adj


def to_json(pg: ProductGraph) -> str:
    doc = {
        "n": pg.graph.n,
        "edges": [list(e) for e in pg.graph.edges],
        "product": {"kind": pg.kind, "m": pg.m, "n": pg.n},
    }
    if pg.graph.labels is not None:
        doc["labels"] = list(pg.graph.labels)
    return json.dumps(doc, sort_keys=True)


def from_json(text: str) -> ProductGraph:
    doc = json.loads(text)
    meta = doc["product"]
    graph = from_edges(doc["n"], [tuple(e) for e in doc["edges"]], doc.get("labels"))
    pg = ProductGraph(graph, meta["m"], meta["n"], meta["kind"])
    if not verify_product_structure(pg):
        raise ValueError("edge set inconsistent with declared product structure")
    return pg


def render_coords(pg: ProductGraph, vertices: Iterable[int]) -> str:
    """Human-readable coordinate listing for a set of product vertices."""
    parts = []
    for v in sorted(set(vertices)):
        i, j = pg.coords(v)
        parts.append(pg.graph.label(v) if pg.graph.labels is not None else f"({i},{j})")
    return " ".join(parts)
