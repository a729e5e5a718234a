"""Edge ideals as squarefree monomial ideals, handled purely combinatorially.

A squarefree monomial is identified with its support (a vertex set). The edge
ideal is generated by the edge monomials, so a squarefree monomial lies in it
iff its support contains an edge.

Zero divisors. The zero divisors of ``S/I`` are the union of the associated
primes of ``I``. For a monomial ideal every associated prime is generated by
variables and equals ``(I : u)`` for some monomial ``u`` not in ``I``. A sum
of variables lies in a prime generated by variables iff each of its
variables does, so the sum is a zero divisor iff some monomial ``u`` outside
``I`` has ``u * x`` in ``I`` for every variable ``x`` of the sum. Membership
of ``u * x`` depends only on the support of ``u``, so ``u`` may be taken
squarefree: an independent set ``S`` containing, for each ``x``, a
submaximal edge adjacent to ``x``. Nothing here depends on the coefficient
field.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .characterization import _pick_search, _require_starstar
from .covers import BudgetExceeded
from .hypergraph import Hypergraph, HypergraphError, bits, submaximal_index
from .partition import PartitionLabeling

ORACLE_MAX_VERTICES = 20


@dataclass(frozen=True)
class MonomialIdeal:
    generators: tuple[int, ...]  # supports as vertex bitmasks, in edge order
    variable_names: tuple[str, ...]

    def contains(self, support: int) -> bool:
        return any(g & support == g for g in self.generators)


def edge_ideal(H: Hypergraph) -> MonomialIdeal:
    return MonomialIdeal(H.edge_masks, H.names)


def contains_squarefree(ideal: MonomialIdeal, S) -> bool:
    """Is the squarefree monomial with support ``S`` (bitmask or names) in the ideal?"""
    if not isinstance(S, int):
        index = {n: i for i, n in enumerate(ideal.variable_names)}
        try:
            S = sum(1 << index[str(x)] for x in set(S))
        except KeyError as exc:
            raise HypergraphError(f"unknown variable {exc.args[0]!r}") from None
    return ideal.contains(S)


def _check_cols(H, labeling, q, cols) -> tuple[int, ...]:
    d = _require_starstar(H, labeling)
    cols = tuple(sorted(set(cols)))
    if len(cols) != labeling.r - d + 2:
        raise HypergraphError(f"need {labeling.r - d + 2} distinct columns, got {len(cols)}")
    if not 0 <= q < labeling.n or not all(0 <= c < labeling.r for c in cols):
        raise HypergraphError("row or column index out of range")
    return cols


def is_zero_divisor_sum(
    H: Hypergraph, labeling: PartitionLabeling, q: int, cols
) -> tuple[bool, int | None]:
    """Is the sum of the row-``q`` variables in columns ``cols`` a zero divisor
    in the edge ring?

    Returns ``(flag, witness support)``; the witness monomial ``f`` is not in
    the ideal while ``f * x`` is, for every variable ``x`` of the sum.
    """
    cols = _check_cols(H, labeling, q, cols)
    found = _pick_search(H, submaximal_index(H), labeling.row(q), cols, set())
    if found is None:
        return False, None
    return True, found[1]


def zero_divisor_sums(H: Hypergraph, labeling: PartitionLabeling):
    """Yield ``(q, cols, flag, witness)`` for every row and column choice."""
    d = _require_starstar(H, labeling)
    for q in range(labeling.n):
        for cols in combinations(range(labeling.r), labeling.r - d + 2):
            flag, w = is_zero_divisor_sum(H, labeling, q, cols)
            yield q, cols, flag, w


def check_zero_divisor_witness(H: Hypergraph, support: int, variables) -> bool:
    """``f`` outside the ideal, and ``f * x`` inside it for every ``x``."""
    ideal = edge_ideal(H)
    if ideal.contains(support):
        return False
    return all(ideal.contains(support | (1 << x)) for x in variables)


class SubsetSweep:
    """Exhaustive table over all vertex subsets, for independent verification.

    ``independent[S]`` says S contains no edge; ``completes[v][S]`` says
    ``S + v`` contains an edge through ``v`` with v outside S.
    """

    def __init__(self, H: Hypergraph, max_vertices: int = ORACLE_MAX_VERTICES):
        m = H.vertex_count
        if m > max_vertices:
            raise BudgetExceeded(f"{m} vertices exceeds the subset-sweep bound {max_vertices}")
        self.H = H
        subsets = np.arange(1 << m, dtype=np.int64)
        has_edge = np.zeros(1 << m, dtype=bool)
        for e in H.edge_masks:
            has_edge |= (subsets & e) == e
        self.independent = ~has_edge
        self._subsets = subsets
        self._completes: dict[int, np.ndarray] = {}

    def completes(self, v: int) -> np.ndarray:
        if v not in self._completes:
            bit = 1 << v
            out = np.zeros_like(self.independent)
            for e in self.H.incident_masks(v):
                rest = e & ~bit
                out |= (self._subsets & rest) == rest
            out &= (self._subsets & bit) == 0
            self._completes[v] = out
        return self._completes[v]

    def exists(self, variables) -> bool:
        hit = self.independent.copy()
        for v in variables:
            hit &= self.completes(v)
        return bool(hit.any())


def zero_divisor_oracle(
    H: Hypergraph,
    labeling: PartitionLabeling,
    q: int,
    cols,
    sweep: SubsetSweep | None = None,
) -> bool:
    """Subset-sweep decision of the same question as :func:`is_zero_divisor_sum`."""
    cols = _check_cols(H, labeling, q, cols)
    sweep = sweep or SubsetSweep(H)
    return sweep.exists(labeling.vertex(q, c) for c in cols)


# -- export ---------------------------------------------------------------

_IDENT = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")
_RESERVED = {"R", "I"}
FORMATS = ("m2", "singular")


def sanitize_names(names) -> tuple[tuple[str, ...], dict[str, str]]:
    """Map names to identifiers accepted by both export targets.

    Valid identifiers (a letter, then letters, digits or underscores, and not
    the ring/ideal names ``R``/``I``) pass through. Others become ``v`` plus
    the name with non-identifier characters replaced by ``_``, then ``_`` and
    the vertex index, e.g. ``"1"`` at index 0 becomes ``v1_0``. Returns the
    new names and the mapping of changed names.
    """
    out, changed = [], {}
    taken = {n for n in names if _IDENT.match(n) and n not in _RESERVED}
    for i, name in enumerate(names):
        if _IDENT.match(name) and name not in _RESERVED:
            out.append(name)
            continue
        new = "v" + re.sub(r"[^A-Za-z0-9_]", "_", name) + f"_{i}"
        while new in taken:
            new += "_"
        taken.add(new)
        out.append(new)
        changed[name] = new
    return tuple(out), changed


def export_ideal(ideal: MonomialIdeal, fmt: str) -> str:
    """Render the ideal as a Macaulay2 (``m2``) or Singular script.

    Variables are declared in vertex order; generators are sorted by their
    vertex-id tuples. A header comment lists renamed variables, if any.
    """
    if fmt not in FORMATS:
        raise ValueError(f"unknown export format {fmt!r}; expected one of {FORMATS}")
    if not ideal.generators:
        raise HypergraphError("hypergraph has no edges; nothing to export")
    names, changed = sanitize_names(ideal.variable_names)
    gens = sorted(tuple(bits(g)) for g in ideal.generators)
    monos = ["*".join(names[v] for v in g) for g in gens]
    comment = "--" if fmt == "m2" else "//"
    lines = [f"{comment} renamed: {old} -> {new}" for old, new in changed.items()]
    if fmt == "m2":
        lines.append(f"R = QQ[{','.join(names)}];")
        lines.append(f"I = monomialIdeal({','.join(monos)});")
    else:
        lines.append(f"ring R = 0,({','.join(names)}),dp;")
        lines.append(f"ideal I = {','.join(monos)};")
    return "\n".join(lines) + "\n"
