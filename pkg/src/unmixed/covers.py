"""Exact enumeration of minimal vertex covers.

Covers are obtained as complements of maximal independent sets, which are
enumerated by a branch-and-bound over the vertex order: each vertex is either
added to the growing independent set or excluded from it. An excluded vertex
must end up *blocked*, meaning some edge through it has all of its other
vertices in the independent set; a branch is cut as soon as an excluded
vertex can no longer be blocked.

This module is the brute-force oracle the structural characterizations are
checked against.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

from .hypergraph import Hypergraph, bits, popcount

DEFAULT_MAX_VERTICES = 28


class BudgetExceeded(RuntimeError):
    """A configured size or search bound was hit before an exact answer."""


@dataclass(frozen=True)
class CoverReport:
    """All minimal vertex covers of a hypergraph, as bitmasks.

    ``covers`` is sorted by size, then lexicographically by vertex ids.
    When ``truncated`` is set the cover list is partial: ``unmixed`` is then
    ``False`` if two sizes were already seen and ``None`` otherwise.
    """

    covers: tuple[int, ...]
    size_spectrum: dict[int, int]
    unmixed: bool | None
    witness_pair: tuple[int, int] | None
    truncated: bool = False
    vertex_count: int = field(default=0, compare=False)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(sorted(self.size_spectrum))


def _cover_key(mask: int) -> tuple[int, tuple[int, ...]]:
    return popcount(mask), tuple(bits(mask))


class _Search:
    """Shared state of one maximal-independent-set enumeration."""

    def __init__(self, H: Hypergraph):
        self.H = H
        iso = 0
        for v in H.isolated:
            iso |= 1 << v
        self.isolated = iso
        self.order = [v for v in range(H.vertex_count) if not iso >> v & 1]
        self.incident = [H.incident_masks(v) for v in range(H.vertex_count)]

    def can_include(self, v: int, indep: int) -> bool:
        grown = indep | (1 << v)
        for e in self.incident[v]:
            if e & grown == e:
                return False
        return True

    def blocked(self, u: int, indep: int) -> bool:
        bit = 1 << u
        for e in self.incident[u]:
            rest = e & ~bit
            if rest & indep == rest:
                return True
        return False

    def blockable(self, u: int, excluded: int) -> bool:
        bit = 1 << u
        for e in self.incident[u]:
            if not e & ~bit & excluded:
                return True
        return False

    def run(self, i: int, indep: int, excluded: int, pending: tuple[int, ...]) -> Iterator[int]:
        """Yield maximal independent sets (without isolated vertices)."""
        if i == len(self.order):
            yield indep
            return
        v = self.order[i]
        if self.can_include(v, indep):
            grown = indep | (1 << v)
            still = tuple(u for u in pending if not self.blocked(u, grown))
            yield from self.run(i + 1, grown, excluded, still)
        ex = excluded | (1 << v)
        pend = pending + (v,)
        if all(self.blockable(u, ex) for u in pend):
            yield from self.run(i + 1, indep, ex, pend)

    def frontier(self, depth: int) -> list[tuple[int, int, int, tuple[int, ...]]]:
        """Partial states after deciding the first ``depth`` vertices."""
        states = [(0, 0, 0, ())]
        for _ in range(min(depth, len(self.order))):
            nxt = []
            for i, indep, excluded, pending in states:
                v = self.order[i]
                if self.can_include(v, indep):
                    grown = indep | (1 << v)
                    nxt.append((i + 1, grown, excluded,
                                tuple(u for u in pending if not self.blocked(u, grown))))
                ex = excluded | (1 << v)
                pend = pending + (v,)
                if all(self.blockable(u, ex) for u in pend):
                    nxt.append((i + 1, indep, ex, pend))
            states = nxt
        return states


def iter_minimal_covers(H: Hypergraph, max_vertices: int = DEFAULT_MAX_VERTICES) -> Iterator[int]:
    """Lazily yield minimal vertex covers as bitmasks, in search order."""
    if H.vertex_count > max_vertices:
        raise BudgetExceeded(
            f"{H.vertex_count} vertices exceeds the cover-enumeration bound {max_vertices}"
        )
    s = _Search(H)
    full = H.full_mask
    for m in s.run(0, 0, 0, ()):
        yield full & ~(m | s.isolated)


def _subtree_covers(args) -> list[int]:
    H, state = args
    s = _Search(H)
    full = H.full_mask
    return [full & ~(m | s.isolated) for m in s.run(*state)]


def _report(H: Hypergraph, covers, truncated: bool) -> CoverReport:
    covers = tuple(sorted(set(covers), key=_cover_key))
    spectrum = dict(sorted(Counter(popcount(c) for c in covers).items()))
    witness = None
    if len(spectrum) > 1:
        lo, hi = min(spectrum), max(spectrum)
        witness = (
            next(c for c in covers if popcount(c) == lo),
            next(c for c in covers if popcount(c) == hi),
        )
    if witness is not None:
        unmixed = False
    elif truncated:
        unmixed = None
    else:
        unmixed = True
    return CoverReport(covers, spectrum, unmixed, witness, truncated, H.vertex_count)


def enumerate_minimal_covers(
    H: Hypergraph,
    limit: int | None = None,
    max_vertices: int = DEFAULT_MAX_VERTICES,
    workers: int = 1,
) -> CoverReport:
    """Compute every minimal vertex cover of ``H``.

    ``limit`` stops after that many covers and marks the report truncated.
    With ``workers > 1`` the search tree is split into subtrees that run in
    separate processes; the final report is identical to the sequential one.
    """
    if workers > 1 and limit is None:
        if H.vertex_count > max_vertices:
            raise BudgetExceeded(
                f"{H.vertex_count} vertices exceeds the cover-enumeration bound {max_vertices}"
            )
        states = _Search(H).frontier(depth=max(1, workers.bit_length() + 2))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = pool.map(_subtree_covers, [(H, st) for st in states])
            found = [c for chunk in chunks for c in chunk]
        return _report(H, found, truncated=False)

    found = []
    truncated = False
    for c in iter_minimal_covers(H, max_vertices):
        if limit is not None and len(found) >= limit:
            truncated = True
            break
        found.append(c)
    return _report(H, found, truncated)


def is_unmixed(
    H: Hypergraph, max_vertices: int = DEFAULT_MAX_VERTICES
) -> tuple[bool, tuple[int, int] | None]:
    """Decide unmixedness, stopping at the first pair of covers of different sizes.

    The witness pair is ordered (smaller cover, larger cover).
    """
    first = None
    for c in iter_minimal_covers(H, max_vertices):
        if first is None:
            first = c
        elif popcount(c) != popcount(first):
            pair = sorted((first, c), key=_cover_key)
            return False, (pair[0], pair[1])
    return True, None
