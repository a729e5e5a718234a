"""Immutable hypergraph representation and its primitive predicates.

Vertices are dense integer ids ``0..m-1`` with a name table. Vertex sets are
handled internally as integer bitmasks (bit ``v`` set iff vertex ``v`` is a
member); Python integers have no width limit, so the same code path serves
hypergraphs of any size.

Public predicates accept a vertex set either as an ``int`` mask or as an
iterable of vertex labels.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence


class HypergraphError(ValueError):
    """Invalid hypergraph input."""


def bits(mask: int) -> list[int]:
    """Ids of the set bits of ``mask`` in ascending order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def mask_from_ids(ids: Iterable[int]) -> int:
    m = 0
    for v in ids:
        m |= 1 << v
    return m


def popcount(mask: int) -> int:
    return bin(mask).count("1")


class Hypergraph:
    """A finite hypergraph with named vertices.

    Edges are stored canonically as ascending id tuples, sorted and free of
    duplicates. Isolated vertices are allowed; see :attr:`isolated`.
    """

    __slots__ = ("_names", "_index", "_edges", "_masks", "_edgeset", "_incident")

    def __init__(self, names: Sequence[str], edges: Iterable[Iterable[int]]):
        names = tuple(names)
        index = {name: i for i, name in enumerate(names)}
        if len(index) != len(names):
            raise HypergraphError("vertex names must be distinct")
        canon = set()
        for e in edges:
            ids = tuple(sorted(e))
            if not ids:
                raise HypergraphError("empty edge")
            if len(set(ids)) != len(ids):
                raise HypergraphError(f"edge {ids} repeats a vertex")
            if ids[0] < 0 or ids[-1] >= len(names):
                raise HypergraphError(f"edge {ids} references an unknown vertex id")
            canon.add(ids)
        self._names = names
        self._index = index
        self._edges = tuple(sorted(canon))
        self._masks = tuple(mask_from_ids(e) for e in self._edges)
        self._edgeset = frozenset(self._masks)
        incident: list[list[int]] = [[] for _ in names]
        for m, e in zip(self._masks, self._edges):
            for v in e:
                incident[v].append(m)
        self._incident = tuple(tuple(x) for x in incident)

    # -- construction ----------------------------------------------------

    @classmethod
    def build(
        cls,
        vertex_names: Iterable,
        edges: Iterable[Iterable],
        enforce_clutter: bool = False,
    ) -> "Hypergraph":
        """Build from labels; labels are converted with ``str``.

        Duplicate edges are merged. Raises :class:`HypergraphError` on an
        empty edge, an unknown label, or (with ``enforce_clutter``) an edge
        contained in another.
        """
        names = [str(x) for x in vertex_names]
        index = {n: i for i, n in enumerate(names)}
        if len(index) != len(names):
            raise HypergraphError("vertex names must be distinct")
        id_edges = []
        for e in edges:
            labels = [str(x) for x in e]
            if not labels:
                raise HypergraphError("empty edge")
            try:
                id_edges.append([index[x] for x in labels])
            except KeyError as exc:
                raise HypergraphError(f"unknown vertex label {exc.args[0]!r}") from None
        H = cls(names, id_edges)
        if enforce_clutter:
            bad = H.clutter_violation()
            if bad is not None:
                small, big = bad
                raise HypergraphError(
                    f"clutter violation: {H.render_edge(small)} is contained in {H.render_edge(big)}"
                )
        return H

    # -- basic accessors -------------------------------------------------

    @property
    def names(self) -> tuple[str, ...]:
        return self._names

    @property
    def vertex_count(self) -> int:
        return len(self._names)

    @property
    def edges(self) -> tuple[tuple[int, ...], ...]:
        return self._edges

    @property
    def edge_masks(self) -> tuple[int, ...]:
        return self._masks

    @property
    def full_mask(self) -> int:
        return (1 << len(self._names)) - 1

    def incident_masks(self, v: int) -> tuple[int, ...]:
        """Masks of the edges containing vertex ``v``."""
        return self._incident[v]

    def vertex_id(self, label) -> int:
        try:
            return self._index[str(label)]
        except KeyError:
            raise HypergraphError(f"unknown vertex label {label!r}") from None

    def mask(self, vertices) -> int:
        """Bitmask of a vertex set given as an ``int`` mask or as labels."""
        if isinstance(vertices, int) and not isinstance(vertices, bool):
            if vertices < 0 or vertices >> len(self._names):
                raise HypergraphError("mask references vertices outside the hypergraph")
            return vertices
        return mask_from_ids(self.vertex_id(x) for x in vertices)

    def names_of(self, mask: int) -> tuple[str, ...]:
        """Names of the vertices in ``mask``, in vertex order."""
        return tuple(self._names[v] for v in bits(mask))

    def name_set(self, mask: int) -> frozenset[str]:
        return frozenset(self.names_of(mask))

    def render_set(self, vertices) -> str:
        """Canonical text: sorted names joined by commas inside braces."""
        if isinstance(vertices, int) and not isinstance(vertices, bool):
            names = self.names_of(vertices)
        else:
            names = [self._names[v] for v in vertices]
        return "{" + ",".join(sorted(names)) + "}"

    render_edge = render_set

    def render_edges(self) -> str:
        return " ".join(sorted(self.render_set(e) for e in self._edges))

    # -- flags -----------------------------------------------------------

    @property
    def isolated(self) -> tuple[int, ...]:
        """Ids of vertices lying in no edge."""
        return tuple(v for v, inc in enumerate(self._incident) if not inc)

    @property
    def is_covered(self) -> bool:
        """Every vertex lies in some edge."""
        return not self.isolated

    def clutter_violation(self):
        """First pair (smaller, larger) of edges with containment, else None."""
        ms = sorted(zip(self._masks, self._edges), key=lambda t: (len(t[1]), t[1]))
        for i, (a, ea) in enumerate(ms):
            for b, eb in ms[i + 1:]:
                if len(eb) > len(ea) and a & b == a:
                    return ea, eb
        return None

    @property
    def is_clutter(self) -> bool:
        return self.clutter_violation() is None

    # -- structural helpers used across modules --------------------------

    def is_independent_mask(self, mask: int) -> bool:
        for e in self._masks:
            if e & mask == e:
                return False
        return True

    def is_cover_mask(self, mask: int) -> bool:
        for e in self._masks:
            if not e & mask:
                return False
        return True

    def has_edge(self, vertices) -> bool:
        return self.mask(vertices) in self._edgeset

    def has_edge_mask(self, mask: int) -> bool:
        return mask in self._edgeset

    def __eq__(self, other):
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return self._names == other._names and self._edges == other._edges

    def __hash__(self):
        return hash((self._names, self._edges))

    def __repr__(self):
        return f"Hypergraph(vertices={len(self._names)}, edges={self.render_edges()})"


def build(vertex_names, edges, enforce_clutter: bool = False) -> Hypergraph:
    return Hypergraph.build(vertex_names, edges, enforce_clutter)


def uniformity(H: Hypergraph) -> int | None:
    """Common edge cardinality, or None if edges differ in size (or there are none)."""
    sizes = {len(e) for e in H.edges}
    if len(sizes) == 1:
        return sizes.pop()
    return None


def is_independent(H: Hypergraph, S) -> bool:
    """True iff ``S`` contains no edge."""
    return H.is_independent_mask(H.mask(S))


def is_vertex_cover(H: Hypergraph, C) -> bool:
    return H.is_cover_mask(H.mask(C))


def is_minimal_cover_mask(H: Hypergraph, c: int) -> bool:
    if not H.is_cover_mask(c):
        return False
    # each member needs a private edge; single-vertex removal suffices for covers
    for v in bits(c):
        if H.is_cover_mask(c & ~(1 << v)):
            return False
    return True


def is_minimal_vertex_cover(H: Hypergraph, C) -> bool:
    """A cover no proper subset of which is a cover."""
    return is_minimal_cover_mask(H, H.mask(C))


def is_maximal_independent_mask(H: Hypergraph, m: int) -> bool:
    if not H.is_independent_mask(m):
        return False
    for v in bits(H.full_mask & ~m):
        if H.is_independent_mask(m | (1 << v)):
            return False
    return True


@dataclass(frozen=True)
class SubmaximalEdge:
    """A (d-1)-subset of an edge together with the vertices completing it."""

    members: tuple[int, ...]
    neighborhood: tuple[int, ...]

    @property
    def mask(self) -> int:
        return mask_from_ids(self.members)

    def adjacent_to(self, v: int) -> bool:
        return v in self.neighborhood


def _require_uniform(H: Hypergraph, minimum: int = 2) -> int:
    d = uniformity(H)
    if d is None:
        raise HypergraphError("hypergraph is not uniform")
    if d < minimum:
        raise HypergraphError(f"edge size {d} is below {minimum}")
    return d


def neighborhood_of(H: Hypergraph, sub) -> frozenset[int]:
    """N(sub): vertices v with ``sub`` plus v an edge."""
    m = H.mask(sub)
    out = set()
    for e in H.edge_masks:
        rest = e & ~m
        if e & m == m and rest and rest & (rest - 1) == 0:
            out.add(rest.bit_length() - 1)
    return frozenset(out)


def submaximal_edges(H: Hypergraph) -> tuple[SubmaximalEdge, ...]:
    """All submaximal edges, sorted by member ids, each with its neighborhood."""
    _require_uniform(H)
    nbhd: dict[tuple[int, ...], set[int]] = {}
    for e in H.edges:
        for v in e:
            sub = tuple(x for x in e if x != v)
            nbhd.setdefault(sub, set()).add(v)
    return tuple(SubmaximalEdge(k, tuple(sorted(nbhd[k]))) for k in sorted(nbhd))


def submaximal_index(H: Hypergraph) -> tuple[tuple[SubmaximalEdge, ...], ...]:
    """For each vertex v, the submaximal edges adjacent to v, in member order."""
    index: list[list[SubmaximalEdge]] = [[] for _ in range(H.vertex_count)]
    for se in submaximal_edges(H):
        for v in se.neighborhood:
            index[v].append(se)
    return tuple(tuple(x) for x in index)


def neighborhood(H: Hypergraph, v) -> frozenset[int]:
    """Ids of the vertices sharing an edge with ``v``."""
    vid = v if isinstance(v, int) and not isinstance(v, bool) else H.vertex_id(v)
    m = 0
    for e in H.incident_masks(vid):
        m |= e
    return frozenset(bits(m & ~(1 << vid)))


def skeleton(H: Hypergraph, k: int) -> Hypergraph:
    """The k-skeleton: all subsets of edges with 2..k+1 vertices.

    The 0-dimensional faces are the vertex set itself, which is kept whole, so
    ``skeleton(H, 1)`` is directly a graph and ``skeleton(H, 0)`` has no edges.
    """
    if k < 0:
        raise HypergraphError("skeleton dimension must be non-negative")
    faces = set()
    for e in H.edges:
        for size in range(2, min(k + 1, len(e)) + 1):
            faces.update(combinations(e, size))
    return Hypergraph(H.names, faces)


def is_clique(H: Hypergraph, W) -> bool:
    """Every d-subset of ``W`` is an edge (d the uniform edge size)."""
    d = _require_uniform(H, minimum=1)
    ids = bits(H.mask(W))
    if len(ids) < d:
        raise HypergraphError(f"clique test needs at least {d} vertices")
    return all(H.has_edge_mask(mask_from_ids(c)) for c in combinations(ids, d))
