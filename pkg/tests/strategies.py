"""Hypothesis strategies shared by the property tests."""

from hypothesis import strategies as st

from xconn.graph import Graph, from_edges


@st.composite
def connected_graphs(draw, min_n: int = 2, max_n: int = 10) -> Graph:
    """Random connected graph: a random recursive tree plus extra edges."""
    n = draw(st.integers(min_n, max_n))
    edges = {(draw(st.integers(0, i - 1)), i) for i in range(1, n)}
    extra = draw(st.lists(
        st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)),
        max_size=2 * n))
    for u, v in extra:
        if u != v:
            edges.add((min(u, v), max(u, v)))
    return from_edges(n, edges)


@st.composite
def graphs_with_vertex_sets(draw, min_n: int = 2, max_n: int = 10):
    g = draw(connected_graphs(min_n, max_n))
    size = draw(st.integers(0, g.n))
    vs = draw(st.sets(st.integers(0, g.n - 1), min_size=size, max_size=size))
    return g, frozenset(vs)
