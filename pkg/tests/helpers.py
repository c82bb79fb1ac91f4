"""Shared test material: reference graphs and a hypothesis graph strategy."""

from __future__ import annotations

from hypothesis import strategies as st

from bkroute import Arc, Graph

# Four-node chain with a costly direct shortcut; the standing worked example.
CHAIN = Graph(4, [(1, 2, 1), (2, 3, 1), (3, 4, 1), (1, 4, 10)])


@st.composite
def graphs(draw, min_n: int = 2, max_n: int = 8, min_w: int = 1, max_w: int = 100):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)))
    arcs = tuple(Arc(i, j, draw(st.integers(min_w, max_w))) for i, j in chosen)
    return Graph(n, arcs)
