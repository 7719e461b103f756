"""Edge duplication: expanding a weighted hypergraph into shadow copies.

The expansion of an edge of weight ell replaces each vertex by ell shadow
copies and keeps the tuples whose shadow levels sum to at most ell + |edge|
- 1.  The cover ideal of the expanded hypergraph coincides, generator by
generator, with the polarized symbolic power of the original cover ideal,
and verify_polarization_identity checks that equality literally.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Mapping, Sequence

from .complexes import AttachmentRecord
from .hypergraphs import Hypergraph, from_complex
from .ideals import MonomialIdeal, cover_ideal, polarize, symbolic_power
from .shadows import make_shadow


@dataclass(frozen=True)
class WeightedHypergraph:
    """Hypergraph plus one non-negative weight per edge, in canonical edge order."""

    base: Hypergraph
    weights: tuple[int, ...]

    def __post_init__(self):
        weights = tuple(int(w) for w in self.weights)
        if len(weights) != len(self.base.edges):
            raise ValueError(
                f"{len(weights)} weights for {len(self.base.edges)} edges"
            )
        if any(w < 0 for w in weights):
            raise ValueError("weights must be non-negative")
        object.__setattr__(self, "weights", weights)

    def weight_of(self, edge: Sequence[str]) -> int:
        key = self.base.sort_vertices(edge)
        return self.weights[self.base.edges.index(key)]


def uniform_weights(hg: Hypergraph, ell: int) -> WeightedHypergraph:
    return WeightedHypergraph(hg, (ell,) * len(hg.edges))


def weighted_from_record(
    record: AttachmentRecord, weights: Sequence[int]
) -> WeightedHypergraph:
    """Reindex record-order weights onto the canonical edge order."""
    if len(weights) != len(record.facet_order):
        raise ValueError(
            f"{len(weights)} weights for {len(record.facet_order)} facets"
        )
    by_facet = {frozenset(f): w for f, w in zip(record.facet_order, weights)}
    hg = from_complex(record.complex)
    return WeightedHypergraph(hg, tuple(by_facet[frozenset(e)] for e in hg.edges))


def expand_edge(edge: Sequence[str], ell: int) -> Hypergraph:
    """Shadow expansion of a single edge; weight 0 leaves isolated level-1 copies."""
    vs = tuple(dict.fromkeys(edge))
    if ell == 0:
        return Hypergraph(tuple(make_shadow(v, 1) for v in vs), ())
    a = len(vs)
    vertices = tuple(make_shadow(v, f) for v in vs for f in range(1, ell + 1))
    edges = []
    for f in product(range(1, ell + 1), repeat=a):
        if sum(f) <= ell + a - 1:
            edges.append(tuple(make_shadow(v, fv) for v, fv in zip(vs, f)))
    return Hypergraph(vertices, tuple(edges))


def expansion_size(a: int, ell: int) -> int:
    """Edge count of a weight-ell expansion of an edge with a vertices."""
    from math import comb

    return comb(ell - 1 + a, a) if ell >= 1 else 0


def expand_hypergraph(wh: WeightedHypergraph) -> Hypergraph:
    """Union of the per-edge expansions, ordered by (base vertex, shadow level)."""
    depth: dict[str, int] = {}
    for e, w in zip(wh.base.edges, wh.weights):
        for v in e:
            depth[v] = max(depth.get(v, 0), max(w, 1))
    vertices = tuple(
        make_shadow(v, f)
        for v in wh.base.vertices
        if v in depth
        for f in range(1, depth[v] + 1)
    )
    edges: list[tuple[str, ...]] = []
    for e, w in zip(wh.base.edges, wh.weights):
        edges.extend(expand_edge(e, w).edges)
    return Hypergraph(vertices, tuple(edges))


def check_star_condition(record: AttachmentRecord, weights: Sequence[int]) -> bool:
    """Each attachment's full-simplex weight dominates all weights through its vertex."""
    if len(weights) != len(record.facet_order):
        raise ValueError(
            f"{len(weights)} weights for {len(record.facet_order)} facets"
        )
    s = record.base_facet_count
    for i, v in enumerate(record.cover):
        if record.distinguished[i] is None:
            raise ValueError(
                f"attachment at {v!r} has no full-simplex part; the condition is undefined"
            )
        anchor = weights[s + i]
        through = [w for f, w in zip(record.facet_order, weights) if v in f]
        if any(anchor < w for w in through):
            return False
    return True


@dataclass(frozen=True)
class PolarizationReport:
    equal: bool
    lhs: MonomialIdeal
    rhs: MonomialIdeal
    lhs_only: tuple[str, ...]
    rhs_only: tuple[str, ...]


def verify_polarization_identity(hg: Hypergraph, ell: int) -> PolarizationReport:
    """Compare polarize(J^(ell)) with the cover ideal of the uniform expansion."""
    if ell < 1:
        raise ValueError("ell must be >= 1")
    lhs = polarize(symbolic_power(cover_ideal(hg), ell))
    rhs = cover_ideal(expand_hypergraph(uniform_weights(hg, ell)))
    left = set(lhs.gens)
    right = set(rhs.gens)
    lhs_only = tuple(sorted(lhs.gen_strings()[i] for i, g in enumerate(lhs.gens) if g not in right))
    rhs_only = tuple(sorted(rhs.gen_strings()[i] for i, g in enumerate(rhs.gens) if g not in left))
    return PolarizationReport(left == right, lhs, rhs, lhs_only, rhs_only)
