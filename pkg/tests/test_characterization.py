import pytest
from conftest import BIPARTITE_ROWS, NINE_VERTEX_ROWS, bipartite_failure, nine_vertex
from hypothesis import given, settings
from hypothesis import strategies as st
from oracles import starstar_condition_brute

from unmixed import (
    HypergraphError,
    PartitionLabeling,
    build,
    check_witness,
    graph_neighborhood_condition,
    cross_validate,
    enumerate_minimal_covers,
    find_perfect_matching,
    is_unmixed,
    lemma32_check,
    pairwise_matching_condition,
    prop36_hypothesis,
    theorem33_condition,
    validate_matching,
    villarreal_condition,
)
from unmixed.characterization import lemma32_union_cover, lemma32_union_is_minimal_cover
from unmixed.generators import gen_matched, gen_starstar
from unmixed.hypergraph import bits, popcount


def ex37():
    H = nine_vertex()
    return H, PartitionLabeling.from_names(H, NINE_VERTEX_ROWS)


def picks_named(H, w):
    return [(col, H.names_of(se.mask)) for col, se in w.picks]


def bipartite(extra, n):
    rows = [[f"x{j}", f"y{j}"] for j in range(1, n + 1)]
    H = build([v for r in rows for v in r], rows + extra)
    return H, PartitionLabeling.from_names(H, rows)


class TestTheorem33:
    def test_nine_vertex_fails_with_efgh_union(self):
        H, L = ex37()
        cert = theorem33_condition(H, L)
        assert cert.verdict == "fails"
        w = cert.witness
        assert w.q == 0
        assert picks_named(H, w) == [(1, ("e", "g")), (2, ("f", "h"))]
        assert H.names_of(w.union) == tuple("efgh")
        assert check_witness(H, L, w)

    def test_single_edge_holds(self):
        H = build(["x1", "x2", "x3"], [["x1", "x2", "x3"]])
        cert = theorem33_condition(H, PartitionLabeling.from_names(H, [["x1", "x2", "x3"]]))
        assert cert.holds and cert.witness is None

    def test_bipartite_failure_witness(self):
        H = bipartite_failure()
        L = PartitionLabeling.from_names(H, BIPARTITE_ROWS)
        cert = theorem33_condition(H, L)
        w = cert.witness
        assert w.q == 1
        assert picks_named(H, w) == [(0, ("x32",)), (1, ("x11",))]
        assert H.names_of(w.union) == ("x11", "x32")
        assert enumerate_minimal_covers(H).sizes == (3, 4)

    def test_precondition(self):
        H = nine_vertex()
        with pytest.raises(HypergraphError):
            theorem33_condition(H, PartitionLabeling.from_names(H, ["abc", "def", "ghi"]))

    def test_witness_checker_rejects_tampering(self):
        H, L = ex37()
        w = theorem33_condition(H, L).witness
        from dataclasses import replace
        assert not check_witness(H, L, replace(w, union=w.union | 1))
        assert not check_witness(H, L, replace(w, q=2))


class TestLemma32:
    @pytest.mark.parametrize("n,r", [(1, 2), (2, 3), (3, 3), (2, 4)])
    def test_disjoint_rows(self, n, r):
        doc = gen_starstar(n, r, r, 0.0, 0)
        H = doc.hypergraph()
        assert lemma32_check(H, doc.labeling(H)) == (True, None)

    def test_single_edge(self):
        H = build("xy", ["xy"])
        assert lemma32_check(H, PartitionLabeling.from_names(H, ["xy"]))[0]

    def test_nine_vertex_fails(self):
        H, L = ex37()
        ok, cover = lemma32_check(H, L)
        assert not ok
        assert any(popcount(cover & L.row_mask(j)) == 2 for j in range(3))
        # {b,c,d,i} is another offender
        bcdi = H.mask("bcdi")
        assert bcdi in enumerate_minimal_covers(H).covers
        assert popcount(bcdi & L.row_mask(0)) == 2

    def test_union_cover(self):
        H, L = ex37()
        assert H.names_of(lemma32_union_cover(L, 3)) == ("a", "e", "h")
        assert lemma32_union_is_minimal_cover(H, L)


class TestVillarreal:
    def test_n2_cross_edge_holds(self):
        H, L = bipartite([["x1", "y2"]], 2)
        assert villarreal_condition(H, L).holds
        assert theorem33_condition(H, L).holds
        assert enumerate_minimal_covers(H).sizes == (2,)

    def test_matching_only(self):
        H, L = bipartite([], 3)
        assert villarreal_condition(H, L).holds

    def test_n3_failure(self):
        H, L = bipartite([["x1", "y2"], ["x2", "y3"]], 3)
        cert = villarreal_condition(H, L)
        assert not cert.holds
        assert check_witness(H, L, cert.witness)
        assert H.names_of(cert.witness.union) == ("x1", "y3")
        assert enumerate_minimal_covers(H).sizes == (3, 4)
        assert cert.witness == theorem33_condition(H, L).witness

    def test_requires_graph(self):
        H, L = ex37()
        with pytest.raises(HypergraphError):
            villarreal_condition(H, L)


class TestMatchingConditions:
    def test_nine_vertex(self):
        H = nine_vertex()
        M = find_perfect_matching(H)
        cert = pairwise_matching_condition(H, M)
        assert not cert.holds
        assert H.names_of(cert.witness.union) == tuple("efgh")
        assert check_witness(H, M.as_labeling(), cert.witness)
        assert not prop36_hypothesis(H, M)
        # {a,e,h} has size n = 3, yet H is mixed
        assert H.mask("aeh") in enumerate_minimal_covers(H).covers

    def test_matching_only(self):
        doc = gen_matched(3, 3, 0.0, 0)
        H = doc.hypergraph()
        M = doc.matching_of(H)
        assert pairwise_matching_condition(H, M).holds
        assert prop36_hypothesis(H, M)

    def test_bipartite_failure(self):
        H = bipartite_failure()
        M = validate_matching(H, [tuple(H.vertex_id(x) for x in r) for r in BIPARTITE_ROWS])
        cert = pairwise_matching_condition(H, M)
        assert not cert.holds
        assert H.names_of(cert.witness.union) == ("x11", "x32")

    def test_prop36_n2(self):
        H, L = bipartite([["x1", "y2"]], 2)
        M = validate_matching(H, L.grid)
        assert prop36_hypothesis(H, M)

    def test_not_perfect_rejected(self):
        H = nine_vertex()
        with pytest.raises(HypergraphError):
            pairwise_matching_condition(H, validate_matching(H, [(0, 1, 2)]))


def test_cross_validate_examples():
    H, L = ex37()
    cv = cross_validate(H, L)
    assert cv.agree and not cv.oracle_unmixed and not cv.certificate.holds
    H = build("xy", ["xy"])
    cv = cross_validate(H, PartitionLabeling.from_names(H, ["xy"]))
    assert cv.agree and cv.oracle_unmixed


starstar_params = st.tuples(st.integers(1, 3), st.integers(2, 4)).flatmap(
    lambda nr: st.tuples(st.just(nr[0]), st.just(nr[1]), st.integers(2, nr[1]),
                         st.sampled_from([0.0, 0.1, 0.3, 0.6]), st.integers(0, 10**6)))


@settings(max_examples=120, deadline=None)
@given(starstar_params)
def test_theorem33_against_brute_and_oracle(p):
    n, r, d, prob, seed = p
    doc = gen_starstar(n, r, d, prob, seed)
    H = doc.hypergraph()
    L = doc.labeling(H)
    cert = theorem33_condition(H, L)
    brute = starstar_condition_brute(H.edges, L.grid, d)
    assert cert.holds == (not brute)
    assert cert.holds == is_unmixed(H)[0]
    if not cert.holds:
        assert check_witness(H, L, cert.witness)
        assert frozenset(bits(cert.witness.union)) in brute
    if d == 2:
        assert graph_neighborhood_condition(H, L).holds == cert.holds
        if r == 2:
            assert villarreal_condition(H, L).holds == cert.holds
    # union of the first r-d+1 columns is always a minimal cover of size n(r-d+1)
    assert lemma32_union_is_minimal_cover(H, L)
    if cert.holds:
        assert lemma32_check(H, L) == (True, None)


matched_params = st.tuples(st.integers(1, 4), st.sampled_from([2, 3]),
                           st.sampled_from([0.0, 0.05, 0.15, 0.3]), st.integers(0, 10**6))


@settings(max_examples=120, deadline=None)
@given(matched_params)
def test_matching_sufficiency_and_necessity(p):
    n, d, prob, seed = p
    doc = gen_matched(n, d, prob, seed)
    H = doc.hypergraph()
    M = doc.matching_of(H)
    cert = pairwise_matching_condition(H, M)
    if cert.holds:
        assert is_unmixed(H)[0]
    else:
        assert check_witness(H, M.as_labeling(), cert.witness)
    if prop36_hypothesis(H, M):
        assert cert.holds
