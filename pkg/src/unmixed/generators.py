"""Seeded random instances.

Randomness comes from numpy's PCG64 bit generator seeded with the given
integer, so a (parameters, seed) pair always yields the same document.
Vertices are named ``x{row}_{column}`` (1-based) in row-major order.
"""

from __future__ import annotations

from itertools import combinations, product
from math import comb

import numpy as np

from .hypergraph import HypergraphError
from .instance import InstanceDocument, canonical

ENUMERATE_LIMIT = 10**6


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def _name(j: int, i: int) -> str:
    return f"x{j + 1}_{i + 1}"


def _check_prob(p: float):
    if not 0.0 <= p <= 1.0:
        raise HypergraphError(f"edge probability {p} not in [0, 1]")


def _select(rng, count: int, p: float, enumerate_all, draw_one) -> list:
    """Keep each of ``count`` candidates independently with probability ``p``.

    Small candidate pools are enumerated in order with one uniform draw per
    candidate; large pools draw the number kept from a binomial and then
    rejection-sample that many distinct candidates.
    """
    if count <= ENUMERATE_LIMIT:
        keep = rng.random(count) < p
        return [c for c, k in zip(enumerate_all(), keep) if k]
    k = int(rng.binomial(count, p))
    chosen: dict = {}
    while len(chosen) < k:
        c = draw_one(rng)
        if c is not None:
            chosen.setdefault(c, None)
    return sorted(chosen)


def gen_starstar(n: int, r: int, d: int, extra_edge_prob: float, seed: int) -> InstanceDocument:
    """Rows are d-uniform cliques; extra edges meet each column at most once."""
    if n < 1 or not 2 <= d <= r:
        raise HypergraphError(f"invalid parameters n={n}, r={r}, d={d}")
    _check_prob(extra_edge_prob)
    rng = _rng(seed)
    grid = [[_name(j, i) for i in range(r)] for j in range(n)]
    vertices = tuple(x for row in grid for x in row)
    edges = [tuple(row[i] for i in cols) for row in grid for cols in combinations(range(r), d)]

    col_sets = list(combinations(range(r), d))

    def enumerate_all():
        for cols in col_sets:
            for rows in product(range(n), repeat=d):
                if len(set(rows)) > 1:
                    yield cols, rows

    def draw_one(g):
        cols = col_sets[int(g.integers(len(col_sets)))]
        rows = tuple(int(x) for x in g.integers(n, size=d))
        return (cols, rows) if len(set(rows)) > 1 else None

    count = len(col_sets) * (n**d - n)
    for cols, rows in _select(rng, count, extra_edge_prob, enumerate_all, draw_one):
        edges.append(tuple(grid[j][i] for i, j in zip(cols, rows)))

    meta = {"generator": "starstar", "n": n, "r": r, "d": d,
            "extra_edge_prob": extra_edge_prob, "seed": seed, "rng": "PCG64"}
    return canonical(InstanceDocument(vertices, tuple(edges), tuple(map(tuple, grid)), None, meta))


def gen_matched(n: int, d: int, extra_edge_prob: float, seed: int) -> InstanceDocument:
    """A perfect matching of ``n`` disjoint d-edges plus random extra d-edges."""
    if n < 1 or d < 2:
        raise HypergraphError(f"invalid parameters n={n}, d={d}")
    _check_prob(extra_edge_prob)
    rng = _rng(seed)
    grid = [[_name(j, i) for i in range(d)] for j in range(n)]
    vertices = tuple(x for row in grid for x in row)
    m = len(vertices)
    rows = {tuple(range(j * d, (j + 1) * d)) for j in range(n)}

    def enumerate_all():
        for c in combinations(range(m), d):
            if c not in rows:
                yield c

    def draw_one(g):
        c = tuple(sorted(int(x) for x in g.choice(m, size=d, replace=False)))
        return None if c in rows else c

    matching = tuple(map(tuple, grid))
    edges = list(matching)
    for c in _select(rng, comb(m, d) - n, extra_edge_prob, enumerate_all, draw_one):
        edges.append(tuple(vertices[v] for v in c))

    meta = {"generator": "matched", "n": n, "d": d,
            "extra_edge_prob": extra_edge_prob, "seed": seed, "rng": "PCG64"}
    return canonical(InstanceDocument(vertices, tuple(edges), None, matching, meta))
