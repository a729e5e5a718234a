"""Row/column labelings, the clique-row condition and perfect matchings.

A labeling is an ``n x r`` grid of vertex ids. Columns are the parts of an
r-partition (no edge meets a column twice) and rows are the candidate
cliques. All indices in this module are 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Sequence

from .covers import BudgetExceeded
from .hypergraph import Hypergraph, HypergraphError, bits, is_clique, mask_from_ids, uniformity

DEFAULT_MAX_NODES = 10**7


@dataclass(frozen=True)
class PartitionLabeling:
    grid: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not self.grid or not self.grid[0]:
            raise HypergraphError("labeling grid must be non-empty")
        width = len(self.grid[0])
        if any(len(row) != width for row in self.grid):
            raise HypergraphError("labeling rows must all have the same length")
        flat = [v for row in self.grid for v in row]
        if len(set(flat)) != len(flat):
            raise HypergraphError("labeling repeats a vertex")

    @classmethod
    def from_names(cls, H: Hypergraph, rows: Sequence[Sequence]) -> "PartitionLabeling":
        return cls(tuple(tuple(H.vertex_id(x) for x in row) for row in rows))

    @property
    def n(self) -> int:
        return len(self.grid)

    @property
    def r(self) -> int:
        return len(self.grid[0])

    def vertex(self, j: int, i: int) -> int:
        return self.grid[j][i]

    def row(self, j: int) -> tuple[int, ...]:
        return self.grid[j]

    def column(self, i: int) -> tuple[int, ...]:
        return tuple(row[i] for row in self.grid)

    def row_mask(self, j: int) -> int:
        return mask_from_ids(self.grid[j])

    def column_mask(self, i: int) -> int:
        return mask_from_ids(self.column(i))

    def position(self, v: int) -> tuple[int, int]:
        for j, row in enumerate(self.grid):
            if v in row:
                return j, row.index(v)
        raise KeyError(v)

    def names(self, H: Hypergraph) -> list[list[str]]:
        return [[H.names[v] for v in row] for row in self.grid]


@dataclass(frozen=True)
class Violation:
    kind: str  # "size" | "coverage" | "column" | "row"
    row: int | None = None
    column: int | None = None
    edge: tuple[int, ...] | None = None
    detail: str = ""


def _column_violation(H: Hypergraph, labeling: PartitionLabeling) -> Violation | None:
    for i in range(labeling.r):
        col = labeling.column_mask(i)
        for e, m in zip(H.edges, H.edge_masks):
            if (m & col) & ((m & col) - 1):
                return Violation("column", column=i, edge=e,
                                 detail=f"edge {H.render_set(e)} meets column {i + 1} twice")
    return None


def _coverage_violation(H: Hypergraph, labeling: PartitionLabeling) -> Violation | None:
    if H.vertex_count != labeling.n * labeling.r:
        return Violation("size", detail=f"|V| = {H.vertex_count} but grid is {labeling.n}x{labeling.r}")
    flat = {v for row in labeling.grid for v in row}
    if flat != set(range(H.vertex_count)):
        return Violation("coverage", detail="grid is not a bijection onto the vertex set")
    return None


def validate_starstar(H: Hypergraph, labeling: PartitionLabeling) -> tuple[bool, Violation | None]:
    """Check the equal-columns, clique-rows condition for ``labeling``.

    Requires ``H`` to be d-uniform with ``2 <= d <= r``. Returns
    ``(ok, first_violation)``.
    """
    d = uniformity(H)
    if d is None:
        raise HypergraphError("hypergraph is not uniform")
    if not 2 <= d <= labeling.r:
        raise HypergraphError(f"need 2 <= d <= r, got d={d}, r={labeling.r}")
    bad = _coverage_violation(H, labeling)
    if bad and bad.kind == "size":
        raise HypergraphError(bad.detail)
    if bad is None:
        bad = _column_violation(H, labeling)
    if bad is None:
        for j in range(labeling.n):
            if not is_clique(H, labeling.row_mask(j)):
                missing = next(c for c in combinations(labeling.row(j), d)
                               if not H.has_edge_mask(mask_from_ids(c)))
                bad = Violation("row", row=j, edge=missing,
                                detail=f"row {j + 1} lacks edge {H.render_set(missing)}")
                break
    return bad is None, bad


def validate_condition_star(G: Hypergraph, labeling: PartitionLabeling) -> bool:
    """Graph version: columns independent, rows cliques."""
    if uniformity(G) not in (2, None) or any(len(e) != 2 for e in G.edges):
        raise HypergraphError("condition (*) applies to graphs")
    if _coverage_violation(G, labeling) is not None:
        return False
    if _column_violation(G, labeling) is not None:
        return False
    for row in labeling.grid:
        for a, b in combinations(row, 2):
            if not G.has_edge_mask((1 << a) | (1 << b)):
                return False
    return True


class _Budget:
    def __init__(self, max_nodes: int):
        self.left = max_nodes

    def tick(self):
        self.left -= 1
        if self.left < 0:
            raise BudgetExceeded("search node budget exhausted")


def _adjacency(H: Hypergraph) -> list[int]:
    adj = [0] * H.vertex_count
    for m in H.edge_masks:
        for v in bits(m):
            adj[v] |= m & ~(1 << v)
    return adj


def find_starstar_labeling(
    H: Hypergraph, r: int, max_nodes: int = DEFAULT_MAX_NODES
) -> PartitionLabeling | None:
    """Search for a labeling satisfying the clique-row condition with ``r`` columns.

    Rows are chosen in ascending order of their smallest vertex; each row is
    then placed column by column, trying vertex orders lexicographically, so
    the first labeling found is canonical. Returns None when none exists;
    raises :class:`BudgetExceeded` when the node budget runs out first.
    """
    d = uniformity(H)
    if d is None:
        raise HypergraphError("hypergraph is not uniform")
    if not 2 <= d <= r:
        raise HypergraphError(f"need 2 <= d <= r, got d={d}, r={r}")
    m = H.vertex_count
    if m % r:
        return None
    adj = _adjacency(H)
    budget = _Budget(max_nodes)
    clique_cache: dict[int, bool] = {}

    def row_is_clique(ids: tuple[int, ...]) -> bool:
        key = mask_from_ids(ids)
        if key not in clique_cache:
            clique_cache[key] = all(H.has_edge_mask(mask_from_ids(c)) for c in combinations(ids, d))
        return clique_cache[key]

    # candidate rows through each vertex, in lexicographic order
    def rows_from(first: int, free: int):
        # all other row members must be adjacent to `first` (they share a clique edge)
        pool = [u for u in bits(free & adj[first]) if u > first]
        for rest in combinations(pool, r - 1):
            budget.tick()
            row = (first,) + rest
            if row_is_clique(row):
                yield row

    def place(rows: list[tuple[int, ...]], k: int, cols: list[int], placed: list[tuple[int, ...]]):
        if k == len(rows):
            return placed
        for perm in permutations(rows[k]):
            budget.tick()
            if all(not (adj[v] & cols[i]) for i, v in enumerate(perm)):
                for i, v in enumerate(perm):
                    cols[i] |= 1 << v
                got = place(rows, k + 1, cols, placed + [perm])
                if got is not None:
                    return got
                for i, v in enumerate(perm):
                    cols[i] &= ~(1 << v)
        return None

    def split(free: int, rows: list[tuple[int, ...]]):
        if not free:
            got = place(rows, 0, [0] * r, [])
            return None if got is None else tuple(got)
        first = (free & -free).bit_length() - 1
        for row in rows_from(first, free):
            got = split(free & ~mask_from_ids(row), rows + [row])
            if got is not None:
                return got
        return None

    grid = split(H.full_mask, [])
    return None if grid is None else PartitionLabeling(grid)


@dataclass(frozen=True)
class Matching:
    edges: tuple[tuple[int, ...], ...]
    perfect: bool

    def as_labeling(self) -> PartitionLabeling:
        """Matching edges as grid rows (requires a uniform matching)."""
        return PartitionLabeling(tuple(self.edges))


def validate_matching(H: Hypergraph, edges: Sequence[Sequence[int]]) -> Matching:
    """Check ``edges`` form a matching of ``H`` and report whether it is perfect."""
    used = 0
    canon = []
    for e in edges:
        m = mask_from_ids(e)
        if not H.has_edge_mask(m):
            raise HypergraphError(f"{H.render_set(tuple(e))} is not an edge")
        if m & used:
            raise HypergraphError("matching edges are not pairwise disjoint")
        used |= m
        canon.append(tuple(e))
    return Matching(tuple(canon), used == H.full_mask)


def find_perfect_matching(H: Hypergraph, max_nodes: int = DEFAULT_MAX_NODES) -> Matching | None:
    """Exact-cover backtracking: always extend from the smallest uncovered vertex."""
    budget = _Budget(max_nodes)

    def go(free: int, chosen: list[tuple[int, ...]]):
        if not free:
            return chosen
        v = (free & -free).bit_length() - 1
        for e in H.incident_masks(v):
            budget.tick()
            if e & free == e:
                got = go(free & ~e, chosen + [tuple(bits(e))])
                if got is not None:
                    return got
        return None

    if H.isolated:
        return None
    got = go(H.full_mask, [])
    return None if got is None else Matching(tuple(got), True)
