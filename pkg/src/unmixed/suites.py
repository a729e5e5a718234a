"""Randomized cross-validation suites.

Each instance is checked by the structural criteria and by exhaustive cover
enumeration; every comparison is recorded so callers can assert on it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .characterization import (
    check_witness,
    graph_neighborhood_condition,
    lemma32_union_is_minimal_cover,
    pairwise_matching_condition,
    theorem33_condition,
    villarreal_condition,
)
from .covers import DEFAULT_MAX_VERTICES, enumerate_minimal_covers
from .generators import gen_matched, gen_starstar
from .hypergraph import popcount, uniformity
from .ideal import SubsetSweep, check_zero_divisor_witness, zero_divisor_sums
from .instance import InstanceDocument

STARSTAR_GRID = tuple(
    (n, r, d, p)
    for n in (1, 2, 3)
    for r in (2, 3, 4, 5)
    for d in range(2, r + 1)
    for p in (0.0, 0.1, 0.3, 0.6)
)
MATCHED_GRID = tuple(product((1, 2, 3, 4), (2, 3), (0.0, 0.05, 0.15, 0.3)))
ZERO_DIVISOR_MAX_VERTICES = 16


def starstar_suite(count: int = 600, seed: int = 0):
    """Yield generated clique-row instances cycling through the parameter grid."""
    for k in range(count):
        n, r, d, p = STARSTAR_GRID[k % len(STARSTAR_GRID)]
        yield gen_starstar(n, r, d, p, seed + k)


def matched_suite(count: int = 320, seed: int = 0):
    for k in range(count):
        n, d, p = MATCHED_GRID[k % len(MATCHED_GRID)]
        yield gen_matched(n, d, p, seed + k)


@dataclass
class StarstarResult:
    params: dict
    theorem_holds: bool
    oracle_unmixed: bool
    witness_valid: bool = True
    lemma_rows_ok: bool | None = None  # only meaningful when unmixed
    lemma_union_ok: bool = True
    villarreal_agrees: bool | None = None
    graph_condition_agrees: bool | None = None
    zero_divisor_checked: bool = False
    zero_divisor_agrees: bool = True
    zero_divisor_bridge: bool = True
    notes: list[str] = field(default_factory=list)

    @property
    def agree(self) -> bool:
        return self.theorem_holds == self.oracle_unmixed

    @property
    def ok(self) -> bool:
        return (
            self.agree
            and self.witness_valid
            and self.lemma_rows_ok is not False
            and self.lemma_union_ok
            and self.villarreal_agrees is not False
            and self.graph_condition_agrees is not False
            and self.zero_divisor_agrees
            and self.zero_divisor_bridge
        )


def check_starstar_instance(
    doc: InstanceDocument, max_vertices: int = DEFAULT_MAX_VERTICES, ideal: bool = True
) -> StarstarResult:
    H = doc.hypergraph()
    L = doc.labeling(H)
    d = uniformity(H)
    cert = theorem33_condition(H, L)
    report = enumerate_minimal_covers(H, max_vertices=max_vertices)
    res = StarstarResult(dict(doc.metadata or {}), cert.holds, bool(report.unmixed))
    if cert.witness is not None:
        res.witness_valid = check_witness(H, L, cert.witness)
    if report.unmixed:
        need = L.r - d + 1
        res.lemma_rows_ok = all(
            popcount(c & L.row_mask(j)) == need for c in report.covers for j in range(L.n)
        )
    res.lemma_union_ok = lemma32_union_is_minimal_cover(H, L)
    if d == 2:
        res.graph_condition_agrees = graph_neighborhood_condition(H, L).holds == cert.holds
        if L.r == 2:
            res.villarreal_agrees = villarreal_condition(H, L).holds == cert.holds
    if ideal and H.vertex_count <= ZERO_DIVISOR_MAX_VERTICES:
        res.zero_divisor_checked = True
        sweep = SubsetSweep(H)
        any_zd = False
        for q, cols, flag, w in zero_divisor_sums(H, L):
            xs = [L.vertex(q, c) for c in cols]
            if flag != sweep.exists(xs):
                res.zero_divisor_agrees = False
                res.notes.append(f"zero-divisor mismatch at row {q + 1}, columns {cols}")
            if flag and not check_zero_divisor_witness(H, w, xs):
                res.zero_divisor_agrees = False
                res.notes.append(f"bad zero-divisor witness at row {q + 1}, columns {cols}")
            any_zd |= flag
        res.zero_divisor_bridge = any_zd == (not res.oracle_unmixed)
    return res


@dataclass
class MatchedResult:
    params: dict
    condition_holds: bool
    oracle_unmixed: bool
    hypothesis: bool  # unmixed and a cover of size n exists

    @property
    def sufficient_ok(self) -> bool:
        return not self.condition_holds or self.oracle_unmixed

    @property
    def necessary_ok(self) -> bool:
        return not self.hypothesis or self.condition_holds

    @property
    def ok(self) -> bool:
        return self.sufficient_ok and self.necessary_ok


def check_matched_instance(
    doc: InstanceDocument, max_vertices: int = DEFAULT_MAX_VERTICES
) -> MatchedResult:
    H = doc.hypergraph()
    M = doc.matching_of(H)
    cert = pairwise_matching_condition(H, M)
    report = enumerate_minimal_covers(H, max_vertices=max_vertices)
    unmixed = bool(report.unmixed)
    hypothesis = unmixed and len(M.edges) in report.size_spectrum
    return MatchedResult(dict(doc.metadata or {}), cert.holds, unmixed, hypothesis)
