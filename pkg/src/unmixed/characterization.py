"""Structural unmixedness criteria with checkable certificates.

For a d-uniform hypergraph with a clique-row labeling of ``r`` columns, the
hypergraph is unmixed exactly when no row ``q`` admits submaximal edges
``e_1, ..., e_k`` (``k = r - d + 2``), each completed to an edge by the row
vertex of a different column, whose union is independent. A failing choice
is returned as a :class:`Witness`.

Rows, columns and picks are 0-based here; reports render them 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .covers import DEFAULT_MAX_VERTICES, enumerate_minimal_covers, is_unmixed
from .hypergraph import (
    Hypergraph,
    HypergraphError,
    SubmaximalEdge,
    bits,
    is_minimal_cover_mask,
    popcount,
    submaximal_index,
    uniformity,
)
from .partition import Matching, PartitionLabeling, validate_starstar


@dataclass(frozen=True)
class Witness:
    q: int
    picks: tuple[tuple[int, SubmaximalEdge], ...]  # (column, submaximal edge)
    union: int


@dataclass(frozen=True)
class Certificate:
    holds: bool
    witness: Witness | None = None

    @property
    def verdict(self) -> str:
        return "holds" if self.holds else "fails"


def check_witness(H: Hypergraph, labeling: PartitionLabeling, w: Witness) -> bool:
    """Re-validate a failure witness against the hypergraph predicates."""
    d = uniformity(H)
    cols = [c for c, _ in w.picks]
    if d is None or len(set(cols)) != len(cols):
        return False
    union = 0
    for c, se in w.picks:
        x = labeling.vertex(w.q, c)
        if len(se.members) != d - 1:
            return False
        if not H.has_edge_mask(se.mask | (1 << x)) or se.mask >> x & 1:
            return False
        union |= se.mask
    return union == w.union and H.is_independent_mask(union)


def _pick_search(H, index, row, cols, seen):
    """Depth-first search for independent unions; pick order is lexicographic."""
    lists = [index[row[c]] for c in cols]
    picks: list[SubmaximalEdge] = []

    def go(t: int, union: int):
        if t == len(lists):
            return union
        key = (t, union)
        if key in seen:
            return None
        for se in lists[t]:
            grown = union | se.mask
            # supersets of a non-independent set stay non-independent
            if H.is_independent_mask(grown):
                picks.append(se)
                got = go(t + 1, grown)
                if got is not None:
                    return got
                picks.pop()
        seen.add(key)
        return None

    union = go(0, 0)
    if union is None:
        return None
    return tuple(zip(cols, picks)), union


def _row_tuple_search(H: Hypergraph, rows, k: int) -> Certificate:
    index = submaximal_index(H)
    for q, row in enumerate(rows):
        for cols in combinations(range(len(row)), k):
            found = _pick_search(H, index, row, cols, set())
            if found is not None:
                picks, union = found
                return Certificate(False, Witness(q, picks, union))
    return Certificate(True)


def _require_starstar(H: Hypergraph, labeling: PartitionLabeling) -> int:
    ok, bad = validate_starstar(H, labeling)
    if not ok:
        raise HypergraphError(f"labeling does not satisfy the clique-row condition: {bad.detail}")
    return uniformity(H)


def theorem33_condition(H: Hypergraph, labeling: PartitionLabeling) -> Certificate:
    """Decide the submaximal-edge criterion for a validated labeling.

    Holds iff for every row q and every ``r - d + 2`` distinct columns, each
    choice of submaximal edges adjacent to the corresponding row vertices has
    a non-independent union. On failure the lexicographically least witness
    is returned (rows, then column tuples, then submaximal edges by ids).
    """
    d = _require_starstar(H, labeling)
    return _row_tuple_search(H, labeling.grid, labeling.r - d + 2)


def lemma32_union_cover(labeling: PartitionLabeling, d: int) -> int:
    """Union of the first ``r - d + 1`` columns."""
    m = 0
    for i in range(labeling.r - d + 1):
        m |= labeling.column_mask(i)
    return m


def lemma32_check(
    H: Hypergraph, labeling: PartitionLabeling, max_vertices: int = DEFAULT_MAX_VERTICES
) -> tuple[bool, int | None]:
    """Does every minimal cover meet every row in exactly ``r - d + 1`` vertices?

    Returns ``(ok, first offending cover)``.
    """
    d = _require_starstar(H, labeling)
    need = labeling.r - d + 1
    rows = [labeling.row_mask(j) for j in range(labeling.n)]
    report = enumerate_minimal_covers(H, max_vertices=max_vertices)
    for c in report.covers:
        if any(popcount(c & row) != need for row in rows):
            return False, c
    return True, None


def lemma32_union_is_minimal_cover(H: Hypergraph, labeling: PartitionLabeling) -> bool:
    d = _require_starstar(H, labeling)
    m = lemma32_union_cover(labeling, d)
    return is_minimal_cover_mask(H, m) and popcount(m) == labeling.n * (labeling.r - d + 1)


def _graph_adjacency(G: Hypergraph) -> list[int]:
    adj = [0] * G.vertex_count
    for a, b in G.edges:
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    return adj


def villarreal_condition(G: Hypergraph, labeling: PartitionLabeling) -> Certificate:
    """Bipartite criterion: x_i~y_j and x_j~y_k with i, j, k distinct force x_i~y_k.

    ``labeling`` has rows ``(x_j, y_j)``. A failing triple is reported in the
    same witness shape as :func:`theorem33_condition` (row j, picks
    ``{y_k} ~ x_j`` and ``{x_i} ~ y_j``).
    """
    if labeling.r != 2 or uniformity(G) != 2:
        raise HypergraphError("bipartite criterion needs a graph and a two-column labeling")
    _require_starstar(G, labeling)
    adj = _graph_adjacency(G)
    xs, ys = labeling.column(0), labeling.column(1)
    n = labeling.n
    for j in range(n):
        for k in sorted((k for k in range(n) if k != j), key=lambda k: ys[k]):
            if not adj[xs[j]] >> ys[k] & 1:
                continue
            for i in sorted((i for i in range(n) if i not in (j, k)), key=lambda i: xs[i]):
                if adj[xs[i]] >> ys[j] & 1 and not adj[xs[i]] >> ys[k] & 1:
                    picks = (
                        (0, SubmaximalEdge((ys[k],), tuple(bits(adj[ys[k]])))),
                        (1, SubmaximalEdge((xs[i],), tuple(bits(adj[xs[i]])))),
                    )
                    return Certificate(False, Witness(j, picks, (1 << ys[k]) | (1 << xs[i])))
    return Certificate(True)


def graph_neighborhood_condition(G: Hypergraph, labeling: PartitionLabeling) -> Certificate:
    """Graph criterion: for each row, any choice of one neighbour per row vertex
    must contain an edge."""
    if uniformity(G) != 2:
        raise HypergraphError("graph criterion needs a 2-uniform hypergraph")
    _require_starstar(G, labeling)
    adj = _graph_adjacency(G)
    for q, row in enumerate(labeling.grid):
        choices = [bits(adj[x]) for x in row]
        chosen: list[int] = []

        def go(t: int, union: int):
            if t == len(row):
                return union
            for y in choices[t]:
                if adj[y] & union:
                    continue
                chosen.append(y)
                got = go(t + 1, union | (1 << y))
                if got is not None:
                    return got
                chosen.pop()
            return None

        union = go(0, 0)
        if union is not None:
            picks = tuple(
                (i, SubmaximalEdge((y,), tuple(bits(adj[y])))) for i, y in enumerate(chosen)
            )
            return Certificate(False, Witness(q, picks, union))
    return Certificate(True)


def _require_perfect(H: Hypergraph, matching: Matching) -> int:
    d = uniformity(H)
    if d is None or d < 2:
        raise HypergraphError("matching criteria need a d-uniform hypergraph with d >= 2")
    if not matching.perfect:
        raise HypergraphError("matching is not perfect")
    return d


def pairwise_matching_condition(H: Hypergraph, matching: Matching) -> Certificate:
    """Sufficient condition for unmixedness given a perfect matching.

    For each matching edge q and two distinct positions in it, every pair of
    submaximal edges adjacent to those two vertices must have a
    non-independent union. Matching edges play the role of rows.
    """
    _require_perfect(H, matching)
    return _row_tuple_search(H, matching.edges, 2)


def prop36_hypothesis(
    H: Hypergraph, matching: Matching, max_vertices: int = DEFAULT_MAX_VERTICES
) -> bool:
    """Unmixed (by enumeration) and some minimal cover has ``|matching|`` vertices."""
    _require_perfect(H, matching)
    report = enumerate_minimal_covers(H, max_vertices=max_vertices)
    return bool(report.unmixed) and len(matching.edges) in report.size_spectrum


@dataclass(frozen=True)
class CrossValidation:
    certificate: Certificate
    oracle_unmixed: bool
    oracle_witness: tuple[int, int] | None

    @property
    def agree(self) -> bool:
        return self.certificate.holds == self.oracle_unmixed


def cross_validate(
    H: Hypergraph, labeling: PartitionLabeling, max_vertices: int = DEFAULT_MAX_VERTICES
) -> CrossValidation:
    cert = theorem33_condition(H, labeling)
    unmixed, pair = is_unmixed(H, max_vertices=max_vertices)
    return CrossValidation(cert, unmixed, pair)
