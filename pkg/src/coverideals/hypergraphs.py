"""Simple hypergraphs with explicit isolated vertices.

Deletion and contraction of vertices, stripping of isolated vertices,
minimal vertex covers, maximal independent sets, and the independence
complex.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .complexes import SimplicialComplex, complex_from_faces
from .shadows import validate_label
from .transversals import minimal_transversals


@dataclass(frozen=True)
class Hypergraph:
    """Ordered vertex universe plus an antichain of non-empty edges."""

    vertices: tuple[str, ...]
    edges: tuple[tuple[str, ...], ...]

    def __post_init__(self):
        vertices = tuple(self.vertices)
        if len(set(vertices)) != len(vertices):
            raise ValueError("duplicate vertex labels")
        for v in vertices:
            validate_label(v)
        rank = {v: i for i, v in enumerate(vertices)}
        edges = []
        for e in self.edges:
            if not e:
                raise ValueError("hypergraph edges must be non-empty")
            for v in e:
                if v not in rank:
                    raise ValueError(f"edge vertex {v!r} not in the universe")
            edges.append(tuple(sorted(set(e), key=rank.__getitem__)))
        edges = sorted(set(edges), key=lambda e: tuple(rank[v] for v in e))
        sets = [frozenset(e) for e in edges]
        for i, a in enumerate(sets):
            for j, b in enumerate(sets):
                if i != j and a <= b:
                    raise ValueError(f"edges are not an antichain: {edges[i]} <= {edges[j]}")
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", tuple(edges))

    @cached_property
    def rank(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def edge_sets(self) -> tuple[frozenset[str], ...]:
        return tuple(frozenset(e) for e in self.edges)

    def sort_vertices(self, vs: Iterable[str]) -> tuple[str, ...]:
        return tuple(sorted(vs, key=self.rank.__getitem__))


def from_complex(cx: SimplicialComplex) -> Hypergraph:
    """Facets become edges; empty facets contribute nothing."""
    return Hypergraph(cx.vertices, tuple(f for f in cx.facets if f))


def independence_complex(hg: Hypergraph) -> SimplicialComplex:
    """Complex generated by the maximal edge-free vertex sets."""
    return complex_from_faces(hg.vertices, maximal_independent_sets(hg))


def isolated_vertices(hg: Hypergraph) -> tuple[str, ...]:
    """Vertices lying in no edge, together with vertices of trivial edges."""
    covered: set[str] = set()
    trivial: set[str] = set()
    for e in hg.edge_sets:
        if len(e) == 1:
            trivial |= e
        covered |= e
    return tuple(v for v in hg.vertices if v not in covered or v in trivial)


def is_isolated(hg: Hypergraph) -> bool:
    return len(isolated_vertices(hg)) == len(hg.vertices)


def strip_isolated(hg: Hypergraph) -> Hypergraph:
    """Drop isolated vertices; trivial edges vanish with their vertex."""
    dead = set(isolated_vertices(hg))
    return Hypergraph(
        tuple(v for v in hg.vertices if v not in dead),
        tuple(e for e in hg.edges if len(e) > 1),
    )


def delete_vertex(hg: Hypergraph, x: str) -> Hypergraph:
    """Remove the vertex and every edge through it."""
    _check_vertex(hg, x)
    return Hypergraph(
        tuple(v for v in hg.vertices if v != x),
        tuple(e for e, s in zip(hg.edges, hg.edge_sets) if x not in s),
    )


def contract_vertex(hg: Hypergraph, x: str) -> Hypergraph:
    """Shrink edges through the vertex; keep other edges not absorbed by a shrunken one."""
    _check_vertex(hg, x)
    if frozenset({x}) in hg.edge_sets:
        raise ValueError(f"cannot contract {x!r}: it carries a trivial edge")
    through = [s - {x} for s in hg.edge_sets if x in s]
    kept = [
        s
        for s in hg.edge_sets
        if x not in s and not any(t <= s for t in through)
    ]
    new_edges = {frozenset(t) for t in through} | set(kept)
    return Hypergraph(
        tuple(v for v in hg.vertices if v != x),
        tuple(tuple(sorted(e, key=hg.rank.__getitem__)) for e in new_edges),
    )


def delete_vertices(hg: Hypergraph, xs: Iterable[str]) -> Hypergraph:
    for x in xs:
        hg = delete_vertex(hg, x)
    return hg


def contract_vertices(hg: Hypergraph, xs: Iterable[str]) -> Hypergraph:
    for x in xs:
        hg = contract_vertex(hg, x)
    return hg


def _check_vertex(hg: Hypergraph, x: str):
    if x not in hg.rank:
        raise ValueError(f"vertex {x!r} not in the hypergraph")


def minimal_vertex_covers(hg: Hypergraph) -> list[frozenset[str]]:
    """All inclusion-minimal transversals of the edge set."""
    return minimal_transversals(hg.edges, hg.vertices)


def maximal_independent_sets(hg: Hypergraph) -> list[frozenset[str]]:
    """Complements of the minimal vertex covers within the vertex universe."""
    full = frozenset(hg.vertices)
    return [full - c for c in minimal_vertex_covers(hg)]


def disjoint_union(a: Hypergraph, b: Hypergraph) -> Hypergraph:
    overlap = set(a.vertices) & set(b.vertices)
    if overlap:
        raise ValueError(f"vertex sets overlap: {sorted(overlap)}")
    return Hypergraph(a.vertices + b.vertices, a.edges + b.edges)
