import pytest
from conftest import BIPARTITE_ROWS, NINE_VERTEX_ROWS, bipartite_failure, mixed_clutter, nine_vertex
from hypothesis import given, settings
from hypothesis import strategies as st
from oracles import zero_divisor_brute
from strategies import hypergraphs

from unmixed import (
    Hypergraph,
    HypergraphError,
    PartitionLabeling,
    build,
    contains_squarefree,
    edge_ideal,
    export_ideal,
    is_independent,
    is_unmixed,
    is_zero_divisor_sum,
    zero_divisor_oracle,
)
from unmixed.generators import gen_starstar
from unmixed.ideal import SubsetSweep, check_zero_divisor_witness, sanitize_names, zero_divisor_sums
from unmixed.hypergraph import bits
from unmixed.instance import load_instance


def ex37():
    H = nine_vertex()
    return H, PartitionLabeling.from_names(H, NINE_VERTEX_ROWS)


def test_edge_ideal_generators():
    H = build("xy", ["xy"])
    assert edge_ideal(H).generators == (0b11,)
    assert len(edge_ideal(nine_vertex()).generators) == 5
    degrees = sorted(len(bits(g)) for g in edge_ideal(mixed_clutter()).generators)
    assert degrees == [2, 2, 2, 3]


def test_contains_squarefree():
    I = edge_ideal(nine_vertex())
    assert not contains_squarefree(I, "efgh")
    assert contains_squarefree(I, "abc")
    assert contains_squarefree(I, "begi")


@settings(max_examples=40, deadline=None)
@given(hypergraphs(max_vertices=12, max_edges=8))
def test_membership_independence_duality(H):
    I = edge_ideal(H)
    for s in range(H.full_mask + 1):
        assert contains_squarefree(I, s) == (not is_independent(H, s))


class TestZeroDivisor:
    def test_nine_vertex(self):
        H, L = ex37()
        flag, w = is_zero_divisor_sum(H, L, 0, [1, 2])
        assert flag
        assert H.names_of(w) == tuple("efgh")
        I = edge_ideal(H)
        assert not I.contains(w)
        assert I.contains(w | (1 << H.vertex_id("b")))
        assert I.contains(w | (1 << H.vertex_id("c")))
        assert zero_divisor_oracle(H, L, 0, [1, 2])

    def test_single_edge(self):
        H = build("xy", ["xy"])
        L = PartitionLabeling.from_names(H, ["xy"])
        assert is_zero_divisor_sum(H, L, 0, [0, 1]) == (False, None)
        assert not zero_divisor_oracle(H, L, 0, [0, 1])

    def test_bipartite_failure(self):
        H = bipartite_failure()
        L = PartitionLabeling.from_names(H, BIPARTITE_ROWS)
        flag, w = is_zero_divisor_sum(H, L, 1, [0, 1])
        assert flag and H.names_of(w) == ("x11", "x32")

    def test_wrong_column_count(self):
        H, L = ex37()
        with pytest.raises(HypergraphError):
            is_zero_divisor_sum(H, L, 0, [0, 1, 2])
        with pytest.raises(HypergraphError):
            is_zero_divisor_sum(H, L, 5, [0, 1])

    def test_oracle_bound(self):
        H = Hypergraph([f"v{i}" for i in range(25)], [(0, 1)])
        from unmixed import BudgetExceeded
        with pytest.raises(BudgetExceeded):
            SubsetSweep(H)

    @pytest.mark.parametrize("n,r,d", [(1, 3, 2), (2, 3, 3), (3, 2, 2), (2, 4, 3)])
    def test_unmixed_fixtures_have_no_zero_divisor_sums(self, n, r, d):
        doc = gen_starstar(n, r, d, 0.0, 0)
        H = doc.hypergraph()
        L = doc.labeling(H)
        sweep = SubsetSweep(H)
        for q, cols, flag, _ in zero_divisor_sums(H, L):
            assert not flag
            assert not zero_divisor_oracle(H, L, q, cols, sweep)


params = st.tuples(st.integers(1, 3), st.integers(2, 4)).flatmap(
    lambda nr: st.tuples(st.just(nr[0]), st.just(nr[1]), st.integers(2, nr[1]),
                         st.sampled_from([0.1, 0.3, 0.6]), st.integers(0, 10**6))
).filter(lambda p: p[0] * p[1] <= 9)


@settings(max_examples=60, deadline=None)
@given(params)
def test_zero_divisor_routes_agree(p):
    n, r, d, prob, seed = p
    doc = gen_starstar(n, r, d, prob, seed)
    H = doc.hypergraph()
    L = doc.labeling(H)
    sweep = SubsetSweep(H)
    any_zd = False
    for q, cols, flag, w in zero_divisor_sums(H, L):
        xs = [L.vertex(q, c) for c in cols]
        assert flag == zero_divisor_oracle(H, L, q, cols, sweep)
        assert flag == (zero_divisor_brute(range(H.vertex_count), H.edges, xs) is not None)
        if flag:
            assert check_zero_divisor_witness(H, w, xs)
        any_zd |= flag
    assert any_zd == (not is_unmixed(H)[0])


class TestExport:
    @pytest.mark.parametrize("name", ["single_edge", "nine_vertex", "mixed_clutter"])
    @pytest.mark.parametrize("fmt,ext", [("m2", "m2"), ("singular", "sing")])
    def test_golden(self, fixtures_dir, golden_dir, name, fmt, ext):
        H = load_instance(fixtures_dir / f"{name}.json").hypergraph()
        text = export_ideal(edge_ideal(H), fmt)
        assert text == (golden_dir / f"{name}.{ext}").read_text()
        assert text == export_ideal(edge_ideal(H), fmt)

    def test_single_edge_two_lines(self):
        text = export_ideal(edge_ideal(build("xy", ["xy"])), "m2")
        assert text.splitlines() == ["R = QQ[x,y];", "I = monomialIdeal(x*y);"]

    def test_errors(self):
        with pytest.raises(HypergraphError):
            export_ideal(edge_ideal(Hypergraph(["a"], [])), "m2")
        with pytest.raises(ValueError):
            export_ideal(edge_ideal(build("xy", ["xy"])), "maple")

    def test_sanitize(self):
        names, changed = sanitize_names(["a", "1", "x-y", "R", "v1_1"])
        assert names == ("a", "v1_1_", "vx_y_2", "vR_3", "v1_1")
        assert changed == {"1": "v1_1_", "x-y": "vx_y_2", "R": "vR_3"}
        assert len(set(names)) == len(names)
