from hypothesis import strategies as st

from unmixed import Hypergraph


@st.composite
def hypergraphs(draw, max_vertices=8, max_edges=10, uniform=None):
    m = draw(st.integers(uniform or 1, max_vertices))
    size = st.just(uniform) if uniform else st.integers(1, m)
    edges = draw(st.lists(
        size.flatmap(lambda k: st.sets(st.integers(0, m - 1), min_size=k, max_size=k)),
        min_size=1 if uniform else 0, max_size=max_edges,
    ))
    return Hypergraph([f"v{i}" for i in range(m)], edges)
